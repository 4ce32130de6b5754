#!/usr/bin/env python3
"""
Utility functions for printing result documents to the console.
These functions are used by the secoh command line after a run.
"""


def format_group(invariant_factors, free_rank):
    """Invariant factors as 'C2 x C4 x Z^2', or '0' for the trivial group."""
    parts = [f"C{d}" for d in invariant_factors]
    if free_rank == 1:
        parts.append("Z")
    elif free_rank > 1:
        parts.append(f"Z^{free_rank}")
    return " x ".join(parts) if parts else "0"


def summarize(document):
    """
    Count results and checks in a result document.
    """
    checks = document.get("checks", [])
    passed = sum(1 for c in checks if c["pass"])
    return {
        'degrees': len(document.get("results", [])),
        'checks': len(checks),
        'passed': passed,
        'failed': len(checks) - passed,
        'observations': len(document.get("observations", [])),
    }


def print_results(document):
    print(f"\n📊 COHOMOLOGY ({document['variant']}):")
    for record in document.get("results", []):
        group = format_group(record["invariant_factors"], record["free_rank"])
        print(f"   H^{record['degree']} = {group}")
        print(f"      ambient ranks: {record['source_rank']} -> {record['target_rank']}, "
              f"{record['millis']} ms")


def print_checks(document):
    print(f"\n🔍 IDENTITY CHECKS:")
    for check in document.get("checks", []):
        if check["pass"]:
            print(f"   ✅ {check['name']}")
        else:
            print(f"   ❌ {check['name']}")
            print(f"      Witness: {check['witness']}")
    for observation in document.get("observations", []):
        if "skipped" in observation:
            print(f"   ⚠️  {observation['name']} skipped: {observation['skipped']}")
        else:
            details = {k: v for k, v in observation.items() if k != "name"}
            print(f"   📄 {observation['name']}: {details}")


def print_oracle(document):
    print(f"\n🧮 BRUTE FORCE:")
    for summary in document.get("oracle", []):
        print(f"   degree {summary['degree']}: |Z| = {summary['cycles']}, "
              f"|B| = {summary['boundaries']}, |H| = {summary['order']}, "
              f"exponent {summary['exponent']}")


def print_faces(document):
    for table in document.get("faces", []):
        print(f"\n📚 FACES OF DEGREE {table['degree']} "
              f"({table['target_size']} tuples -> {table['source_size']}):")
        for row in table["rows"]:
            sources = ", ".join(str(face["source"]) for face in row["faces"])
            print(f"   {row['target']}: g={row['g']} a={row['a']} -> [{sources}]")


def print_summary(document):
    """
    Print a result document in a readable format.
    """
    stats = summarize(document)
    print("\n" + "="*80)
    print(f"SECONDARY COHOMOLOGY - {document['mode'].upper()}")
    print("="*80)
    print(f"   Input hash: {document['input_hash']}")

    if document.get("results"):
        print_results(document)
    if document.get("oracle"):
        print_oracle(document)
    if document.get("checks") or document.get("observations"):
        print_checks(document)
    if document.get("faces"):
        print_faces(document)

    if stats['checks']:
        print(f"\n📈 {stats['passed']}/{stats['checks']} checks passed")
    print("\n" + "="*80)
