"""
Problem documents: JSON schema (pydantic) and the domain validation that
turns a document into ready-to-run complex data.
"""

import hashlib
import logging
from dataclasses import dataclass
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from abelian_core.fg_groups import FgAbGroup
from complexes.coboundary import Cochain
from complexes.settings import ComplexData, Variant
from group_data.actions import action_from_rows, trivial_action
from group_data.cocycles import Cochain2, Cocycle3, validate_cocycle3
from group_data.finite_group import trivial_group, validate_group
from utilities.errors import AxiomError, DimensionError, ProblemSpecError
from utilities.file_utils import dumps_canonical, parse_json_text

logger = logging.getLogger(__name__)

MODES = ("cohomology", "verify", "oracle", "faces-dump")


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class GroupModel(_Strict):
    order: int = Field(ge=1)
    table: List[List[int]]
    identity: int = 0
    name: Optional[str] = None


class ModuleModel(_Strict):
    invariants: List[int] = Field(default_factory=list)
    action: Optional[List[List[List[int]]]] = None


class TableModel(_Strict):
    values: List[List[int]]


class ProblemModel(_Strict):
    variant: Literal["abelian", "triple", "classical"]
    G: Optional[GroupModel] = None
    A: Optional[ModuleModel] = None
    B: ModuleModel
    kappa: Optional[TableModel] = None
    u: Optional[TableModel] = None
    R: Optional[TableModel] = None
    degrees: List[int] = Field(default_factory=lambda: [2])
    mode: Literal["cohomology", "verify", "oracle", "faces-dump"] = "cohomology"

    @field_validator("degrees")
    @classmethod
    def _non_negative(cls, degrees):
        if not degrees:
            raise ValueError("at least one degree is required")
        if any(n < 0 for n in degrees):
            raise ValueError(f"degrees must be non-negative, got {degrees}")
        return degrees


@dataclass(frozen=True)
class ProblemSpec:
    variant: Variant
    data: ComplexData
    degrees: tuple
    mode: str
    u: Optional[Cochain2] = None
    R: Optional[Cochain] = None
    document: dict = None

    @property
    def input_hash(self):
        return hashlib.sha256(dumps_canonical(self.document).encode("utf-8")).hexdigest()

    def with_overrides(self, mode=None, degrees=None):
        """Command-line overrides; the hashed document records what actually runs."""
        degrees = tuple(degrees) if degrees is not None else self.degrees
        mode = mode or self.mode
        document = dict(self.document or {}, mode=mode, degrees=list(degrees))
        return ProblemSpec(self.variant, self.data, degrees, mode, self.u, self.R, document)


def _location(error):
    return ".".join(str(part) for part in error["loc"])


def _module(model, field):
    try:
        return FgAbGroup(tuple(model.invariants))
    except ValueError as e:
        raise ProblemSpecError(str(e), field=f"{field}.invariants")


def _action(G, module, model, field):
    if model.action is None:
        return trivial_action(G, module)
    try:
        return action_from_rows(G, module, model.action)
    except (AxiomError, DimensionError) as e:
        raise ProblemSpecError(str(e), field=f"{field}.action", witness=getattr(e, "witness", None))


def _group(model):
    if model is None:
        raise ProblemSpecError("a group table is required for this variant", field="G")
    if len(model.table) != model.order:
        raise ProblemSpecError(f"table has {len(model.table)} rows for order {model.order}", field="G.table")
    try:
        return validate_group(model.table, model.identity, model.name or "")
    except AxiomError as e:
        raise ProblemSpecError(f"{e.axiom}: {e}", field="G.table", witness=e.witness)


def build_problem(model):
    """Domain validation of a schema-checked document."""
    variant = Variant(model.variant)

    if variant is Variant.ABELIAN:
        G = trivial_group()
    else:
        G = _group(model.G)

    B = _module(model.B, "B")
    if variant is Variant.ABELIAN:
        action_b = trivial_action(G, B)
    else:
        action_b = _action(G, B, model.B, "B")

    if variant is Variant.CLASSICAL:
        data = ComplexData.classical(action_b)
    else:
        if model.A is None:
            raise ProblemSpecError("module A is required for this variant", field="A")
        A = _module(model.A, "A")
        if not A.is_finite:
            raise ProblemSpecError(f"A must be finite, got {A}", field="A.invariants")
        if variant is Variant.ABELIAN:
            data = ComplexData.abelian(A, B)
        else:
            action_a = _action(G, A, model.A, "A")
            if model.kappa is None:
                kappa = Cocycle3.zero(action_a)
            else:
                try:
                    kappa = validate_cocycle3(Cocycle3.from_values(action_a, model.kappa.values))
                except (AxiomError, DimensionError) as e:
                    raise ProblemSpecError(str(e), field="kappa.values", witness=getattr(e, "witness", None))
            data = ComplexData.triple(action_a, action_b, kappa)

    u = None
    if model.u is not None:
        if variant is not Variant.TRIPLE:
            raise ProblemSpecError("u is only meaningful for the triple variant", field="u")
        try:
            u = Cochain2.from_values(data.action_a, model.u.values)
        except DimensionError as e:
            raise ProblemSpecError(str(e), field="u.values")

    R = None
    if model.R is not None:
        if variant is Variant.CLASSICAL:
            raise ProblemSpecError("R is a secondary 4-cochain", field="R")
        size = data.size(4)
        if len(model.R.values) != size or any(len(v) != data.r for v in model.R.values):
            raise ProblemSpecError(f"R needs {size} values of {data.r} coordinates", field="R.values")
        R = Cochain(data, 4, tuple(x for v in model.R.values for x in v)).canonical()

    return ProblemSpec(
        variant=variant,
        data=data,
        degrees=tuple(model.degrees),
        mode=model.mode,
        u=u,
        R=R,
        document=model.model_dump(),
    )


def parse_problem(text):
    """
    Parse and validate a problem document.

    Raises:
        ProblemSpecError: syntax error (with line and column), schema error
            (with the field path) or failed axiom (with witnesses)
    """
    document = parse_json_text(text)
    try:
        model = ProblemModel.model_validate(document)
    except ValidationError as e:
        first = e.errors()[0]
        raise ProblemSpecError(first["msg"], field=_location(first))
    spec = build_problem(model)
    logger.debug("parsed %s problem, degrees %s, mode %s", spec.variant.value, spec.degrees, spec.mode)
    return spec
