"""Development audit: run every transcribed table entry through the checkers.

Prints one line per item with its verdict, retrying failures under the
sibling comultiplication variant and candidate completions for the known
truncated item.  Not part of the package.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))
sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

import corpus_tables as tables

from rbx.linalg import zeros
from rbx.scalar import ParamRing
from rbx.structures import (
    Algebra, Bialgebra, Coalgebra, LinearOp, check_bialgebra,
)
from rbx.rota_baxter import (
    check_rb_algebra, check_rb_coalgebra, check_rb_cosystem, check_rb_system,
)


def build_ring(fam):
    return ParamRing(fam["params"], relations=fam.get("relations"))


def build_mul(ring, fam):
    n = fam["dimension"]
    mul = zeros(ring, (n, n, n))
    for i, row in enumerate(fam["mul"]):
        for j, image in enumerate(row):
            for k, coeff in image.items():
                mul[i, j, k] = ring.scalar(coeff)
    return mul


def build_comul(ring, n, terms):
    comul = zeros(ring, (n, n, n))
    for i, pieces in enumerate(terms):
        for j, k, coeff in pieces:
            comul[i, j, k] = ring.scalar(coeff)
    return comul


def build_vec(ring, n, entries):
    from rbx.linalg import Tensor
    vec = Tensor(ring, (n,))
    for i, coeff in entries.items():
        vec[(i,)] = ring.scalar(coeff)
    return vec


def build_op(ring, n, images):
    mat = zeros(ring, (n, n))
    for j, image in enumerate(images):
        for i, coeff in image.items():
            if i == "TRUNCATED":
                continue
            mat[i, j] = ring.scalar(coeff)
    return LinearOp(mat)


def family_structures(fam):
    ring = build_ring(fam)
    n = fam["dimension"]
    mul = build_mul(ring, fam)
    unit = build_vec(ring, n, fam["unit"]) if "unit" in fam else None
    counit = build_vec(ring, n, fam["counit"]) if "counit" in fam else None
    alg = Algebra(ring, n, mul, unit=unit, labels=tuple(fam["basis"]))
    coalg = Coalgebra(ring, n, build_comul(ring, n, fam["comul"]),
                      counit=counit, labels=tuple(fam["basis"]))
    alt = None
    if "alt_comul" in fam:
        alt = Coalgebra(ring, n, build_comul(ring, n, fam["alt_comul"]),
                        counit=counit, labels=tuple(fam["basis"]))
    return ring, Bialgebra(alg, coalg), alt


def verdict_str(report):
    if report.ok:
        return "PASS"
    first = report.first_failure()
    return f"FAIL {first}"


def audit_family(fam):
    name = fam["name"]
    ring, h, alt = family_structures(fam)
    n = h.dim
    print(f"== {name} ==")
    print(f"  bialgebra: {verdict_str(check_bialgebra(h))}")
    for idx, images in enumerate(fam.get("RR", []), 1):
        R = build_op(ring, n, images)
        ra = check_rb_algebra(h.alg, R, "lambda")
        rc = check_rb_coalgebra(h.coalg, R, "lambda")
        print(f"  RR.{idx}: alg={verdict_str(ra)} coalg={verdict_str(rc)}")
    for idx, images in enumerate(fam.get("R", []), 1):
        R = build_op(ring, n, images)
        print(f"  R.{idx}: {verdict_str(check_rb_algebra(h.alg, R, 'lambda'))}")
    for idx, images in enumerate(fam.get("Q", []), 1):
        Q = build_op(ring, n, images)
        print(f"  Q.{idx}: {verdict_str(check_rb_coalgebra(h.coalg, Q, 'gamma'))}")
    for idx, (r_images, s_images) in enumerate(fam.get("RS", []), 1):
        R = build_op(ring, n, r_images)
        S = build_op(ring, n, s_images)
        print(f"  RS.{idx}: {verdict_str(check_rb_system(h.alg, R, S))}")
    for idx, (q_images, t_images) in enumerate(fam.get("QT", []), 1):
        Q = build_op(ring, n, q_images)
        T = build_op(ring, n, t_images)
        report = check_rb_cosystem(h.coalg, Q, T)
        line = f"  QT.{idx}: {verdict_str(report)}"
        if not report.ok and alt is not None:
            alt_report = check_rb_cosystem(alt, Q, T)
            line += f"  [alt-comul: {verdict_str(alt_report)}]"
        print(line)
        truncated = [
            (j, image) for j, image in enumerate(q_images)
            if "TRUNCATED" in image
        ]
        if truncated:
            j, image = truncated[0]
            for candidate in range(n):
                mat = Q.mat.copy()
                mat[candidate, j] = mat[candidate, j] \
                    + ring.scalar(image["TRUNCATED"])
                cand_report = check_rb_cosystem(h.coalg, LinearOp(mat), T)
                print(f"      completion row {candidate}: "
                      f"{verdict_str(cand_report)}")


def audit_ex316():
    fam = tables.EX316
    ring, h, _ = family_structures(fam)
    n = h.dim
    ops = {role: build_op(ring, n, images)
           for role, images in fam["bisystem"].items()}
    print("== ex3.16 ==")
    print(f"  bialgebra: {verdict_str(check_bialgebra(h))}")
    print(f"  system:   {verdict_str(check_rb_system(h.alg, ops['R'], ops['S']))}")
    print(f"  cosystem: {verdict_str(check_rb_cosystem(h.coalg, ops['Q'], ops['T']))}")
    # candidate correction: S(x) = -lambda3 z instead of -lambda3 y
    s_fixed = build_op(ring, n, [{2: "-lambda3"}, {}, {}])
    print(f"  system with S(x) -> z: "
          f"{verdict_str(check_rb_system(h.alg, ops['R'], s_fixed))}")


def main():
    for fam in (tables.DIM2, tables.DIM3, tables.DIM4, tables.EX36):
        audit_family(fam)
    audit_ex316()


if __name__ == "__main__":
    main()
