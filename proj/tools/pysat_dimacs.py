#!/usr/bin/env python3
"""Solve a DIMACS CNF file with python-sat and print the answer in the
competition format (`s SATISFIABLE` / `s UNSATISFIABLE`, then `v` lines).

Exit status follows the usual convention: 10 satisfiable, 20 unsatisfiable.
"""
import sys

from pysat.formula import CNF
from pysat.solvers import Minisat22


def main() -> int:
    if len(sys.argv) != 2:
        print("usage: pysat_dimacs.py <file.cnf>", file=sys.stderr)
        return 1
    formula = CNF(from_file=sys.argv[1])
    with Minisat22(bootstrap_with=formula.clauses) as solver:
        if not solver.solve():
            print("s UNSATISFIABLE")
            return 20
        model = solver.get_model() or []
    print("s SATISFIABLE")
    print("v " + " ".join(str(lit) for lit in model) + " 0")
    return 10


if __name__ == "__main__":
    sys.exit(main())
