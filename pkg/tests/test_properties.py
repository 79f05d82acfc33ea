"""Property-based checks: the laws that should survive any random input."""

from hypothesis import given, settings, strategies as st

from parklike import (
    ChiMap,
    Generator,
    ParkingFunction,
    SpeciesEnv,
    blocks_to_pf,
    deserialize,
    generate_parking,
    pf_to_blocks,
    relabel,
    serialize,
    underlying,
    validate_parking,
)
from parklike.expr import E, EPlus, One, Compose, Power, Prod, Ref, Sum, X, Zero
from parklike.structures import canonical_labels

ENV = SpeciesEnv.standard()

leaves = st.sampled_from(
    [Zero(), One(), X(), E(), EPlus(), Ref("L"), Ref("Par"), Ref("Sub")]
)

exprs = st.recursive(
    leaves,
    lambda sub: st.one_of(
        st.tuples(sub, sub).map(lambda p: Sum(*p)),
        st.tuples(sub, sub).map(lambda p: Prod(*p)),
        st.tuples(sub, st.integers(min_value=0, max_value=2)).map(
            lambda p: Power(*p)
        ),
        # inner shaped X*G is guaranteed empty-free, so always admissible
        st.tuples(sub, sub).map(lambda p: Compose(p[0], Prod(X(), p[1]))),
    ),
    max_leaves=4,
)

label_sets = st.sets(st.integers(min_value=-50, max_value=50), max_size=3).map(
    frozenset
)


@given(exprs, label_sets)
@settings(max_examples=60, deadline=None)
def test_generation_is_functorial(expr, labels):
    # generating on any label set equals transporting the canonical result
    direct = Generator(ENV, memoize=False).raw(expr, labels)
    canon = Generator(ENV, memoize=False).raw(expr, canonical_labels(len(labels)))
    iso = dict(zip(sorted(canonical_labels(len(labels))), sorted(labels)))
    assert {serialize(s) for s in direct} == {
        serialize(relabel(s, iso)) for s in canon
    }


@given(exprs, label_sets)
@settings(max_examples=60, deadline=None)
def test_no_duplicates_and_correct_support(expr, labels):
    out = Generator(ENV).raw(expr, labels)
    texts = [serialize(s) for s in out]
    assert len(set(texts)) == len(texts)
    for s in out:
        assert underlying(s) == labels


@given(exprs, label_sets)
@settings(max_examples=60, deadline=None)
def test_serialization_round_trip(expr, labels):
    for s in Generator(ENV).raw(expr, labels):
        assert deserialize(serialize(s)) == s


@given(exprs, st.permutations(range(1, 4)))
@settings(max_examples=60, deadline=None)
def test_relabeling_along_any_bijection(expr, image):
    # not just order isomorphisms: arbitrary bijections transport structures
    labels = canonical_labels(3)
    mapping = dict(zip(sorted(labels), image))
    gen = Generator(ENV)
    moved = {serialize(relabel(s, mapping)) for s in gen.raw(expr, labels)}
    target = {serialize(s) for s in gen.raw(expr, frozenset(image))}
    assert moved == target


# -- parking properties ---------------------------------------------------------


slot_vectors = st.integers(min_value=0, max_value=5).flatmap(
    lambda n: st.tuples(*[st.integers(min_value=1, max_value=n) for _ in range(n)])
)


@given(slot_vectors)
@settings(max_examples=120)
def test_parking_function_round_trip(slots):
    counts_ok = all(
        sum(1 for s in slots if s <= k) >= k for k in range(1, len(slots) + 1)
    )
    pf = ParkingFunction(tuple(enumerate(slots, start=1)))
    if not counts_ok:
        try:
            pf_to_blocks(pf)
        except Exception:
            return
        raise AssertionError("non-parking function was accepted")
    assert blocks_to_pf(pf_to_blocks(pf)) == pf


chi_tables = st.lists(
    st.integers(min_value=0, max_value=3), min_size=5, max_size=7
).map(lambda steps: ChiMap.from_table([sum(steps[: i + 1]) for i in range(len(steps))]))


@given(chi_tables, st.integers(min_value=0, max_value=3))
@settings(max_examples=40, deadline=None)
def test_generated_parking_always_validates(chi, n):
    for p in generate_parking(E(), chi, canonical_labels(n), ENV):
        assert validate_parking(p)
        assert underlying(p) == canonical_labels(n)
