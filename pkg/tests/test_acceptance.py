"""End-to-end acceptance gates, each at its full declared scale.

Every test prints exactly one ACCEPTANCE line (visible even under pytest's
capture) and then asserts, so a red line and a red test always coincide.
The heavy lifting lives in parklike.verify; these are the same checks the
`parklike verify` command runs, pinned here at max_n=None (full scale).
"""

from parklike.verify import REFERENCE_CHECKS, PROPERTY_CHECKS

CHECKS = dict(REFERENCE_CHECKS + PROPERTY_CHECKS)


def _gate(capsys, number, label, names):
    results = [CHECKS[name](max_n=None, env=None, golden_dir=None) for name in names]
    ok = all(r[0] for r in results)
    detail = "; ".join(r[1] for r in results)
    with capsys.disabled():
        print(f"\nACCEPTANCE {number} {'PASS' if ok else 'FAIL'}: {label} -- {detail}")
    assert ok, detail


def test_01_classical_parking_counts(capsys):
    _gate(
        capsys,
        1,
        "set-species parking counts are (n+1)^(n-1) for n <= 7",
        ["classical-counts"],
    )


def test_02_linear_base_golden_listings(capsys):
    _gate(
        capsys,
        2,
        "linear-order parking listings for n <= 3 match the stored golden files",
        ["golden-listings"],
    )


def test_03_worked_six_label_bijection(capsys):
    _gate(
        capsys,
        3,
        "the worked six-label structure maps to the known forest and back",
        ["worked-bijection"],
    )


def test_04_bijection_exhaustive(capsys):
    _gate(
        capsys,
        4,
        "parking-to-tree is a bijection for six bases, all n <= 4",
        ["bijection-exhaustive"],
    )


def test_05_lagrange_vs_fixed_point_vs_generation(capsys):
    _gate(
        capsys,
        5,
        "Lagrange inversion = fixed-point series (order 12) = generation (n <= 6)",
        ["series-three-routes"],
    )


def test_06_partition_and_composition_tables(capsys):
    _gate(
        capsys,
        6,
        "parking counts over partitions and compositions match the reference tables",
        ["reference-tables"],
    )


def test_07_closed_forms(capsys):
    _gate(
        capsys,
        7,
        "closed forms (2n)!/(n+1)! and 2^n(n+1)^(n-1) hold, and match generation",
        ["closed-forms"],
    )


def test_08_kary_correspondence(capsys):
    _gate(
        capsys,
        8,
        "parking over k-ary trees is equinumerous with (k+1)-ary trees",
        ["kary-correspondence"],
    )


def test_09_general_chi_soundness(capsys):
    _gate(
        capsys,
        9,
        "recursive generation equals predicate-filtered enumeration for three chi maps",
        ["general-chi"],
    )


def test_10_property_suite(capsys):
    _gate(
        capsys,
        10,
        "functoriality, convolution, uniqueness, parking invariants, integrality",
        [name for name, _fn in PROPERTY_CHECKS],
    )
