import orthopack


def test_small_packer_end_to_end():
    inst = orthopack.gen_instance_text("uniform-small", 60, seed=5)
    result, packing = orthopack.run(inst, "smalll")
    assert result["ok"]
    assert result["packing_valid"]
    assert result["bins"] >= 1
    assert result["bound"] == "bins <= 8*area + 7"
    assert orthopack.validate_packing_text(packing) == []


def test_validation_flags_overlaps():
    bad = "\n".join(
        [
            "kind lshape",
            "item lx 1/2 wx 1/2 ly 1/2 wy 1/2 bin 0 x 0 y 0",
            "item lx 1/2 wx 1/2 ly 1/2 wy 1/2 bin 0 x 1/4 y 0",
            "",
        ]
    )
    violations = orthopack.validate_packing_text(bad)
    assert violations and "overlap" in violations[0]


def test_zskeleton_adversary_forces_n_bins():
    result, trace, certificate = orthopack.adversary("zskel", 6, "random", seed=3)
    assert result["bins"] == 6
    assert result["opt"] == 1
    assert result["ok"]
    assert len(trace.strip().splitlines()) == 6
    assert orthopack.validate_packing_text(certificate) == []


def test_binsorting_bounds():
    assert orthopack.sort_opt(8, 8) == 1
    forced = orthopack.presenter_vs_policy(8, 8, "middle-slot")
    assert forced >= 3  # ceil(8 / floor(log2 9))


def test_oracles():
    triple = [("9/10", "1/20")] * 3
    assert orthopack.edd_feasible(triple)
    assert not orthopack.edd_feasible(triple + [("9/10", "1/20")])
    assert orthopack.opt_bins_large_symmetric(triple) == 1
    assert orthopack.opt_bins_1d(["1/2", "1/2", "3/5"]) == 2


def test_svg_render():
    inst = orthopack.gen_instance_text("large-symmetric", 5, seed=9)
    _, packing = orthopack.run(inst, "lasyl")
    svg = orthopack.render_svg(packing)
    assert svg.startswith("<svg")
    assert "path" in svg
