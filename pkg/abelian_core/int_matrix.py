"""
Exact sparse integer matrices.

Entries are Python ints (arbitrary precision); only nonzero entries are
stored, row by row. Instances are treated as immutable: every operation
returns a new matrix.
"""

from utilities.errors import DimensionError


class IntMatrix:
    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, rows, cols, data=None):
        if rows < 0 or cols < 0:
            raise DimensionError(f"negative shape {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self._data = {}
        self._hash = None
        if data:
            for i, row in data.items():
                if not 0 <= i < rows:
                    raise DimensionError(f"row {i} outside 0..{rows - 1}")
                clean = {}
                for j, v in row.items():
                    if not 0 <= j < cols:
                        raise DimensionError(f"column {j} outside 0..{cols - 1}")
                    if v:
                        clean[j] = int(v)
                if clean:
                    self._data[i] = clean

    # ------------------------------------------------------------------
    # construction

    @classmethod
    def _wrap(cls, rows, cols, data):
        # trusted constructor: data already clean and owned by the new matrix
        obj = object.__new__(cls)
        obj.rows = rows
        obj.cols = cols
        obj._data = data
        obj._hash = None
        return obj

    @classmethod
    def from_rows(cls, rows_list, cols=None):
        """Build from a dense list of rows; `cols` is needed when there are no rows."""
        rows_list = [list(r) for r in rows_list]
        if cols is None:
            cols = len(rows_list[0]) if rows_list else 0
        data = {}
        for i, r in enumerate(rows_list):
            if len(r) != cols:
                raise DimensionError(f"row {i} has {len(r)} entries, expected {cols}")
            nz = {j: int(v) for j, v in enumerate(r) if v}
            if nz:
                data[i] = nz
        return cls._wrap(len(rows_list), cols, data)

    @classmethod
    def from_columns(cls, columns, rows):
        data = {}
        for j, column in enumerate(columns):
            if len(column) != rows:
                raise DimensionError(f"column {j} has {len(column)} entries, expected {rows}")
            for i, v in enumerate(column):
                if v:
                    data.setdefault(i, {})[j] = int(v)
        return cls._wrap(rows, len(columns), data)

    @classmethod
    def from_entries(cls, rows, cols, entries):
        """Accumulate (i, j, value) triples; repeated positions are summed."""
        data = {}
        for i, j, v in entries:
            if not (0 <= i < rows and 0 <= j < cols):
                raise DimensionError(f"entry ({i}, {j}) outside {rows}x{cols}")
            if v:
                row = data.setdefault(i, {})
                row[j] = row.get(j, 0) + v
        for i in list(data):
            row = {j: v for j, v in data[i].items() if v}
            if row:
                data[i] = row
            else:
                del data[i]
        return cls._wrap(rows, cols, data)

    @classmethod
    def zeros(cls, rows, cols):
        return cls._wrap(rows, cols, {})

    @classmethod
    def identity(cls, n):
        return cls._wrap(n, n, {i: {i: 1} for i in range(n)})

    @classmethod
    def diagonal(cls, entries, rows=None, cols=None):
        entries = list(entries)
        rows = len(entries) if rows is None else rows
        cols = len(entries) if cols is None else cols
        if len(entries) > min(rows, cols):
            raise DimensionError("more diagonal entries than the shape allows")
        return cls._wrap(rows, cols, {i: {i: int(v)} for i, v in enumerate(entries) if v})

    @classmethod
    def hstack(cls, *blocks):
        if not blocks:
            raise DimensionError("hstack needs at least one block")
        rows = blocks[0].rows
        data = {}
        offset = 0
        for block in blocks:
            if block.rows != rows:
                raise DimensionError(f"hstack of {rows}-row and {block.rows}-row blocks")
            for i, row in block._data.items():
                target = data.setdefault(i, {})
                for j, v in row.items():
                    target[j + offset] = v
            offset += block.cols
        return cls._wrap(rows, offset, data)

    @classmethod
    def vstack(cls, *blocks):
        if not blocks:
            raise DimensionError("vstack needs at least one block")
        cols = blocks[0].cols
        data = {}
        offset = 0
        for block in blocks:
            if block.cols != cols:
                raise DimensionError(f"vstack of {cols}-column and {block.cols}-column blocks")
            for i, row in block._data.items():
                data[i + offset] = dict(row)
            offset += block.rows
        return cls._wrap(offset, cols, data)

    @classmethod
    def block_diagonal(cls, blocks):
        data = {}
        r_off = c_off = 0
        for block in blocks:
            for i, row in block._data.items():
                data[i + r_off] = {j + c_off: v for j, v in row.items()}
            r_off += block.rows
            c_off += block.cols
        return cls._wrap(r_off, c_off, data)

    # ------------------------------------------------------------------
    # access

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def nnz(self):
        return sum(len(row) for row in self._data.values())

    def __getitem__(self, index):
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i}, {j}) outside {self.rows}x{self.cols} matrix")
        return self._data.get(i, {}).get(j, 0)

    def row(self, i):
        """Nonzero entries of row i as a {column: value} dict (a copy)."""
        if not 0 <= i < self.rows:
            raise IndexError(f"row {i} outside 0..{self.rows - 1}")
        return dict(self._data.get(i, {}))

    def items(self):
        """Iterate over (i, j, value) for the nonzero entries, row-major."""
        for i in sorted(self._data):
            row = self._data[i]
            for j in sorted(row):
                yield i, j, row[j]

    def column(self, j):
        if not 0 <= j < self.cols:
            raise IndexError(f"column {j} outside 0..{self.cols - 1}")
        out = [0] * self.rows
        for i, row in self._data.items():
            v = row.get(j)
            if v:
                out[i] = v
        return out

    def columns(self):
        out = [[0] * self.rows for _ in range(self.cols)]
        for i, row in self._data.items():
            for j, v in row.items():
                out[j][i] = v
        return out

    def to_rows(self):
        out = [[0] * self.cols for _ in range(self.rows)]
        for i, row in self._data.items():
            r = out[i]
            for j, v in row.items():
                r[j] = v
        return out

    def take_rows(self, start, stop):
        """Rows start..stop-1 as a new matrix."""
        if not 0 <= start <= stop <= self.rows:
            raise DimensionError(f"row range {start}:{stop} outside 0..{self.rows}")
        data = {i - start: dict(row) for i, row in self._data.items() if start <= i < stop}
        return IntMatrix._wrap(stop - start, self.cols, data)

    def is_zero(self):
        return not self._data

    # ------------------------------------------------------------------
    # arithmetic

    def transpose(self):
        data = {}
        for i, row in self._data.items():
            for j, v in row.items():
                data.setdefault(j, {})[i] = v
        return IntMatrix._wrap(self.cols, self.rows, data)

    def __matmul__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        data = {}
        odata = other._data
        for i, row in self._data.items():
            acc = {}
            for k, v in row.items():
                orow = odata.get(k)
                if not orow:
                    continue
                for j, w in orow.items():
                    acc[j] = acc.get(j, 0) + v * w
            acc = {j: v for j, v in acc.items() if v}
            if acc:
                data[i] = acc
        return IntMatrix._wrap(self.rows, other.cols, data)

    def apply(self, vector):
        """Matrix-vector product M·v as a list."""
        if len(vector) != self.cols:
            raise DimensionError(f"vector of length {len(vector)} for {self.shape} matrix")
        out = [0] * self.rows
        for i, row in self._data.items():
            out[i] = sum(v * vector[j] for j, v in row.items())
        return out

    def _combine(self, other, sign):
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        data = {i: dict(row) for i, row in self._data.items()}
        for i, row in other._data.items():
            target = data.setdefault(i, {})
            for j, v in row.items():
                s = target.get(j, 0) + sign * v
                if s:
                    target[j] = s
                else:
                    target.pop(j, None)
            if not target:
                del data[i]
        return IntMatrix._wrap(self.rows, self.cols, data)

    def __add__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, factor):
        if not factor:
            return IntMatrix.zeros(self.rows, self.cols)
        data = {i: {j: v * factor for j, v in row.items()} for i, row in self._data.items()}
        return IntMatrix._wrap(self.rows, self.cols, data)

    # ------------------------------------------------------------------
    # structure

    def monomial_moduli(self):
        """
        If every nonzero entry sits alone in its row and its column, the
        column span is the direct sum of m_i·Z over the rows; return the list
        of m_i (0 for rows without an entry). Otherwise return None.
        """
        seen_cols = set()
        moduli = [0] * self.rows
        for i, row in self._data.items():
            if len(row) != 1:
                return None
            (j, v), = row.items()
            if j in seen_cols:
                return None
            seen_cols.add(j)
            moduli[i] = abs(v)
        return moduli

    # ------------------------------------------------------------------
    # comparison

    def _frozen(self):
        return frozenset(
            (i, j, v) for i, row in self._data.items() for j, v in row.items()
        )

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._frozen()))
        return self._hash

    def __repr__(self):
        if self.rows * self.cols <= 64:
            return f"IntMatrix({self.to_rows()!r})" if self.rows else f"IntMatrix(0x{self.cols})"
        return f"<IntMatrix {self.rows}x{self.cols}, {self.nnz} nonzeros>"
