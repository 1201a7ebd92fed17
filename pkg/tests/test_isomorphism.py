import pytest

from ffkit import (
    FieldIsomorphism,
    OrderMismatchError,
    build_isomorphism,
    compose,
    construct_field,
    enumerate_elements,
    enumerate_isomorphisms,
    multiplicative_order,
    operation_tables,
    verify_isomorphism,
)

# The explicit map sigma: GF(8) -> GF(8)' worked out in full.
SIGMA = {
    "0": "0",
    "1": "1",
    "z": "w+1",
    "z+1": "w",
    "z^2": "w^2+1",
    "z^2+1": "w^2",
    "z^2+z": "w^2+w",
    "z^2+z+1": "w^2+w+1",
}


def as_str_map(iso):
    return {str(a): str(b) for a, b in iso.pairs()}


def renaming_map(source, target):
    """The coefficient-renaming non-isomorphism (z -> w literally)."""
    return FieldIsomorphism(
        source=source,
        target=target,
        root_image=target.element_at(source.element("z").code),
        mapping={a: target.element_at(a.code) for a in enumerate_elements(source)},
    )


class TestBuild:
    def test_root_image_is_first_root(self, F8, F8p):
        iso = build_isomorphism(F8, F8p)
        assert str(iso.root_image) == "w+1"

    def test_sigma_table(self, F8, F8p):
        assert as_str_map(build_isomorphism(F8, F8p)) == SIGMA

    def test_identity_on_same_spec(self, F8):
        iso = build_isomorphism(F8, F8)
        assert str(iso.root_image) == "z"
        assert all(a == b for a, b in iso.pairs())

    def test_order_mismatch(self, F4, F8):
        with pytest.raises(OrderMismatchError):
            build_isomorphism(F4, F8)

    def test_r1_representations(self):
        A = construct_field(3, 1)  # modulus z
        B = construct_field(3, 1, "z+1")  # modulus z+1
        iso = build_isomorphism(A, B)
        assert verify_isomorphism(iso).passed


class TestEnumerate:
    def test_three_isomorphisms_f8(self, F8, F8p):
        isos = enumerate_isomorphisms(F8, F8p)
        assert len(isos) == 3
        assert [str(i.root_image) for i in isos] == ["w+1", "w^2+1", "w^2+w"]
        for iso in isos:
            assert verify_isomorphism(iso).passed
        assert any(as_str_map(i) == SIGMA for i in isos)

    def test_f4_automorphisms(self, F4):
        autos = enumerate_isomorphisms(F4, F4)
        assert len(autos) == 2
        assert [str(a.root_image) for a in autos] == ["z", "z+1"]
        # identity and Frobenius
        assert all(a == b for a, b in autos[0].pairs())
        assert all(b == a.frobenius() for a, b in autos[1].pairs())

    def test_identity_always_included(self, F9):
        autos = enumerate_isomorphisms(F9, F9)
        assert any(all(a == b for a, b in auto.pairs()) for auto in autos)

    @pytest.mark.parametrize("p,r", [(2, 2), (2, 3), (3, 2), (2, 4), (3, 3), (5, 2)])
    def test_automorphism_count_is_r(self, p, r):
        F = construct_field(p, r)
        assert len(enumerate_isomorphisms(F, F)) == r


class TestVerify:
    def test_sigma_passes(self, F8, F8p):
        report = verify_isomorphism(build_isomorphism(F8, F8p))
        assert report.passed
        assert report.exhaustive and report.cases == 64
        assert report.total_and_bijective and report.maps_identities
        assert report.root_image_is_root

    def test_naive_renaming_fails_with_witness(self, F8, F8p):
        report = verify_isomorphism(renaming_map(F8, F8p))
        assert not report.passed
        assert report.witnesses
        u, v, op = report.witnesses[0]
        assert op == "*"
        # the witness really violates multiplicativity
        mapping = renaming_map(F8, F8p).mapping
        assert mapping[u * v] != mapping[u] * mapping[v]

    def test_tampered_mapping_fails_bijectivity(self, F4):
        iso = build_isomorphism(F4, F4)
        iso.mapping[F4.element("z")] = F4.zero
        report = verify_isomorphism(iso)
        assert not report.passed
        assert not report.total_and_bijective

    def test_sampled_verification_above_64(self):
        A = construct_field(3, 4)
        B = construct_field(3, 4, "z^4+z^3+2")
        report = verify_isomorphism(build_isomorphism(A, B), seed=5, samples=300)
        assert report.passed
        assert not report.exhaustive and report.cases == 300


class TestStructuralInvariants:
    def test_tables_transport(self, F8, F8p, F9):
        # mapping applied entrywise to the source tables gives target tables
        cases = [(F8, F8p)]
        F9b = construct_field(3, 2, "z^2+z+2")
        cases.append((F9, F9b))
        for src, dst in cases:
            iso = build_isomorphism(src, dst)
            add_s, mul_s = operation_tables(src)
            add_d, mul_d = operation_tables(dst)
            elems = enumerate_elements(src)
            index = {e: i for i, e in enumerate(enumerate_elements(dst))}
            perm = [index[iso.mapping[e]] for e in elems]
            for i in range(src.q):
                for j in range(src.q):
                    assert index[iso.mapping[add_s[i][j]]] == (
                        index[add_d[perm[i]][perm[j]]]
                    )
                    assert index[iso.mapping[mul_s[i][j]]] == (
                        index[mul_d[perm[i]][perm[j]]]
                    )

    def test_orders_preserved(self, F8, F8p):
        iso = build_isomorphism(F8, F8p)
        for a in enumerate_elements(F8):
            if not a.is_zero:
                assert multiplicative_order(a) == multiplicative_order(
                    iso.mapping[a]
                )

    def test_kernel_trivial(self, F8, F8p):
        iso = build_isomorphism(F8, F8p)
        preimages = [a for a, b in iso.pairs() if b.is_zero]
        assert preimages == [F8.zero]

    def test_composition_closure(self, F8, F8p):
        forward = build_isomorphism(F8, F8p)
        for back in enumerate_isomorphisms(F8p, F8):
            auto = compose(forward, back)
            assert auto.source == F8 and auto.target == F8
            assert verify_isomorphism(auto).passed
            assert as_str_map(auto) in [
                as_str_map(a) for a in enumerate_isomorphisms(F8, F8)
            ]
