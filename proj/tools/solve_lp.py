#!/usr/bin/env python3
"""Solve an exported facility-location LP file with scipy's MILP solver.

Reads the LP text produced by `uflp export-lp` (Minimize / Subject To /
Binary / End sections), solves the binary program, prints the optimal
objective, and writes the facility open-set as a line of 0/1 tokens that
`uflp import-sol` accepts.

Exit codes: 0 solved, 2 bad input, 3 solver unavailable.
"""

import argparse
import re
import sys


def fail(message, code):
    print(f"solve_lp: {message}", file=sys.stderr)
    sys.exit(code)


def parse_lp(text):
    """Return (objective terms, constraints, binary vars).

    Objective terms: {var: coeff}.  Constraints: list of ({var: coeff}, op,
    rhs) with op in {"=", "<="}.
    """
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    section = None
    objective = {}
    constraints = []
    binaries = []

    term_re = re.compile(r"([+-])?\s*(\d+)?\s*([A-Za-z]\w*)")

    def parse_terms(expr):
        terms = {}
        for sign, coeff, var in term_re.findall(expr):
            value = int(coeff) if coeff else 1
            if sign == "-":
                value = -value
            terms[var] = terms.get(var, 0) + value
        return terms

    for line in lines:
        lowered = line.lower()
        if lowered in ("minimize", "subject to", "binary", "end"):
            section = lowered
            continue
        if section == "minimize":
            _, _, expr = line.partition(":")
            objective.update(parse_terms(expr))
        elif section == "subject to":
            _, _, expr = line.partition(":")
            if "<=" in expr:
                lhs, _, rhs = expr.partition("<=")
                constraints.append((parse_terms(lhs), "<=", int(rhs)))
            elif "=" in expr:
                lhs, _, rhs = expr.partition("=")
                constraints.append((parse_terms(lhs), "=", int(rhs)))
            else:
                fail(f"constraint without relation: {line!r}", 2)
        elif section == "binary":
            binaries.extend(line.split())

    if not binaries:
        fail("no Binary section", 2)
    return objective, constraints, binaries


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("lp_file")
    parser.add_argument("--out", help="solution file (default: stdout)")
    args = parser.parse_args()

    try:
        import numpy as np
        from scipy.optimize import Bounds, LinearConstraint, milp
        from scipy.sparse import lil_matrix
    except ImportError as error:
        fail(f"scipy unavailable ({error})", 3)

    try:
        with open(args.lp_file) as handle:
            text = handle.read()
    except OSError as error:
        fail(str(error), 2)

    objective, constraints, binaries = parse_lp(text)
    index = {var: i for i, var in enumerate(binaries)}
    for var in objective:
        if var not in index:
            fail(f"objective uses non-binary variable {var!r}", 2)

    cost = np.zeros(len(binaries))
    for var, coeff in objective.items():
        cost[index[var]] = coeff

    matrix = lil_matrix((len(constraints), len(binaries)))
    lower = np.empty(len(constraints))
    upper = np.empty(len(constraints))
    for row, (terms, op, rhs) in enumerate(constraints):
        for var, coeff in terms.items():
            if var not in index:
                fail(f"constraint uses unknown variable {var!r}", 2)
            matrix[row, index[var]] = coeff
        lower[row] = rhs if op == "=" else -np.inf
        upper[row] = rhs

    result = milp(
        c=cost,
        constraints=LinearConstraint(matrix.tocsr(), lower, upper),
        integrality=np.ones(len(binaries)),
        bounds=Bounds(0, 1),
    )
    if not result.success:
        fail(f"solver failed: {result.message}", 2)

    print(f"objective {round(result.fun)}")
    facility_vars = sorted(
        (var for var in binaries if re.fullmatch(r"y\d+", var)),
        key=lambda var: int(var[1:]),
    )
    bits = " ".join(str(round(result.x[index[var]])) for var in facility_vars)
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(bits + "\n")
    else:
        print(bits)


if __name__ == "__main__":
    main()
