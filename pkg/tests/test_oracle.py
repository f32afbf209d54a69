import pytest

from growthkit.catalog import get_algorithm, list_algorithms
from growthkit.lattice import Geometry, Shape, shapes_of_size
from growthkit.oracle import (
    check_bijection, enumerate_gps, enumerate_sct, sct_count, standard_fillings,
)
from growthkit.wdgg import BUILTIN_INSTANTIATIONS, Channel

Q, O = Geometry.QUADRANT, Geometry.OCTANT


class TestEnumerateGps:
    @pytest.mark.parametrize("n,r,count", [(3, 1, 6), (3, 2, 48), (2, 4, 32)])
    def test_counts(self, n, r, count):
        gps = list(enumerate_gps(n, r))
        assert len(gps) == count
        assert len(set(gps)) == count

    def test_entries_are_full(self):
        for gp in enumerate_gps(3, 1):
            assert len(gp.entries) == 3 and gp.n == gp.m == 3


class TestEnumerateSct:
    def test_unshifted_2_1(self):
        inst = BUILTIN_INSTANTIATIONS["unshifted-1"]
        got = enumerate_sct(inst, Channel.DESCENDING, Shape(Q, (2, 1)))
        assert len(got) == 2  # the two standard fillings of (2,1)

    def test_shifted_2_1_with_colors(self):
        inst = BUILTIN_INSTANTIATIONS["shifted-1"]
        got = enumerate_sct(inst, Channel.DESCENDING, Shape(O, (2, 1)))
        assert len(got) == 2  # one filling, two colorings of the (1,2) box

    def test_single_box_doubled(self):
        inst = BUILTIN_INSTANTIATIONS["unshifted-2"]
        got = enumerate_sct(inst, Channel.DESCENDING, Shape(Q, (1,)))
        assert len(got) == 2

    def test_ascending_channel_uses_w1(self):
        inst = BUILTIN_INSTANTIATIONS["unshifted-mixed"]
        assert len(enumerate_sct(inst, Channel.ASCENDING, Shape(Q, (1,)))) == 2
        assert len(enumerate_sct(inst, Channel.DESCENDING, Shape(Q, (1,)))) == 1

    def test_counts_match_chain_recurrence(self):
        for inst in BUILTIN_INSTANTIATIONS.values():
            for n in range(6):
                for shape in shapes_of_size(inst.geometry, n):
                    for channel in Channel:
                        assert len(enumerate_sct(inst, channel, shape)) == \
                            sct_count(inst, channel, shape)

    def test_standard_fillings_hook_count(self):
        # f(2,1) = 2, f(2,2) = 2, f(3,1) = 3, f(2,1,1) = 3
        f = lambda *rows: len(standard_fillings(Shape(Q, rows)))
        assert (f(2, 1), f(2, 2), f(3, 1), f(2, 1, 1)) == (2, 2, 3, 3)


class TestCheckBijection:
    def test_rs_row_n4_count(self):
        report = check_bijection(get_algorithm("rs-row"), 4)
        assert report.ok and report.expected_count == 24

    def test_sagan_n3(self):
        report = check_bijection(get_algorithm("sagan1"), 3)
        assert report.ok and report.image_count == 6

    def test_double_circle_n3(self):
        report = check_bijection(get_algorithm("double-circle"), 3)
        assert report.ok and report.expected_count == 384

    def test_workers_agree(self):
        serial = check_bijection(get_algorithm("left-right"), 3, workers=1)
        threaded = check_bijection(get_algorithm("left-right"), 3, workers=4)
        assert serial == threaded

    @pytest.mark.parametrize("name", sorted(list_algorithms()))
    def test_all_algorithms_n3(self, name):
        report = check_bijection(get_algorithm(name), 3)
        assert report.ok, str(report)
