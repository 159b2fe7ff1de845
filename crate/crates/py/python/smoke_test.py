"""Smoke test for the fockcalc extension module."""

import json

import fockcalc


def main() -> None:
    lam = fockcalc.Partition([3, 1])
    assert lam.conjugate().parts == [2, 1, 1]
    assert fockcalc.lr_coefficient([2], [1], [1]) == 1
    assert fockcalc.schur_dim([2, 1], 3) == 8
    assert fockcalc.littlewood_so_multiplicity([2, 2], [2]) == 1
    assert fockcalc.littlewood_so_multiplicity([1, 1, 1], [1]) == 0

    pairs = fockcalc.cauchy_decompose(2, 2, 2)
    total = sum(fockcalc.schur_dim(a, 2) * fockcalc.schur_dim(b, 2) for a, b in pairs)
    assert total == 6

    d1 = fockcalc.minor_delta(1, 2, 2, 1)
    assert fockcalc.km_value(2, 2, 1) == d1 ** 2
    assert (d1 * d1).is_pluriharmonic()
    assert fockcalc.Poly.parse(2, 2, 1, str(d1)) == d1

    value, closed, matches = fockcalc.cocycle_value([1, 0], 4, 1, 2)
    assert matches and value == closed
    assert fockcalc.harmonic_dim(3, 1, 2) == 5
    assert fockcalc.root_count(2, 7, 3) == 6

    psi = fockcalc.ArthurParameter.from_levi(json.dumps({"u_blocks": [[1, 0]], "so_block": [3, 1]}))
    assert psi.exponents() == [2, 0, 0, 0, 0, -2]
    assert psi.infinitesimal_character() == ["2", "1", "0"]
    assert psi.is_regular()
    flags = json.loads(psi.predicates(r=1))
    assert flags["sl2_lower_bound_met"]

    assert fockcalc.verify("cauchy")[0]
    code, out = fockcalc.run_cli(["lr", "--lam", "2", "--mu", "1", "--nu", "1"])
    assert code == 0 and json.loads(out)["value"] == 1
    print("fockcalc smoke test passed")


if __name__ == "__main__":
    main()
