import random
import threading
import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from agdalache.evencounter import (
    AddError,
    AddErrorCode,
    OddInitialValueError,
    either_add_integer,
    increase_continuously,
    init_app_state,
    is_even_integer,
)
from agdalache.futures import CancelToken

int64 = st.integers(min_value=-(2**63), max_value=2**63 - 1)


class TestParity:
    def test_zero_is_even(self):
        assert is_even_integer(0)

    def test_negative_odd(self):
        assert not is_even_integer(-3)

    def test_negative_even(self):
        assert is_even_integer(-4)

    def test_agrees_with_arithmetic_oracle(self):
        rng = random.Random(1234)
        for _ in range(10_000):
            x = rng.randint(-(2**63), 2**63 - 1)
            # brute parity: x - 2*floor(x/2) == 0
            assert is_even_integer(x) == (x - 2 * (x // 2) == 0)


class TestEitherAddInteger:
    def test_zero_zero(self):
        assert either_add_integer(0, 0) == 0

    def test_first_odd(self):
        r = either_add_integer(1, 0)
        assert isinstance(r, AddError)
        assert r.code is AddErrorCode.FIRST_ODD
        assert r.message == "first parameter is odd"

    def test_second_odd(self):
        r = either_add_integer(2, 3)
        assert isinstance(r, AddError)
        assert r.message == "second parameter is odd"

    def test_first_checked_before_second(self):
        r = either_add_integer(1, 1)
        assert isinstance(r, AddError)
        assert r.code is AddErrorCode.FIRST_ODD

    @settings(max_examples=1000, deadline=None)
    @given(int64, int64)
    def test_prop_correct_with_two_even(self, x, y):
        assert either_add_integer(2 * x, 2 * y) == 2 * x + 2 * y

    @settings(max_examples=1000, deadline=None)
    @given(int64, int64)
    def test_prop_correct_with_odd_and_even(self, x, y):
        r = either_add_integer(2 * x + 1, 2 * y)
        assert isinstance(r, AddError)
        assert r.message == "first parameter is odd"


class TestAppState:
    def test_init_zero(self):
        assert init_app_state(0).read() == 0

    def test_init_negative_even(self):
        assert init_app_state(-4).read() == -4

    def test_init_odd_rejected(self):
        with pytest.raises(OddInitialValueError):
            init_app_state(3)

    def test_increment_even(self):
        state = init_app_state(0)
        assert state.increment(4) == 4
        assert state.read() == 4

    def test_increment_odd_rejected_and_counter_unchanged(self):
        state = init_app_state(0)
        r = state.increment(3)
        assert isinstance(r, AddError)
        assert r.message == "second parameter is odd"
        assert state.read() == 0

    @settings(max_examples=1000, deadline=None)
    @given(st.lists(st.integers(min_value=-100, max_value=100), max_size=20))
    def test_replay_oracle_random_sequences(self, deltas):
        state = init_app_state(0)
        expected = 0  # oracle: replay the log with plain ints
        for d in deltas:
            r = state.increment(d)
            if d % 2 == 0:
                expected += d
                assert r == expected
            else:
                assert isinstance(r, AddError)
            assert state.read() == expected
            assert state.read() % 2 == 0


class TestIncreaseContinuously:
    def test_duration_zero_returns_immediately(self):
        state = init_app_state(8)
        start = time.monotonic()
        assert increase_continuously(state, 0, CancelToken()) == 8
        assert time.monotonic() - start < 0.05

    def test_negative_duration_rejected(self):
        with pytest.raises(ValueError):
            increase_continuously(init_app_state(0), -1, CancelToken())

    def test_five_second_run_reaches_ten(self):
        state = init_app_state(0)
        ticks = []
        start = time.monotonic()
        value = increase_continuously(state, 5, CancelToken(), ticks.append)
        assert value == 10  # 5 ticks x 2, arithmetic oracle
        assert ticks == [2, 4, 6, 8, 10]
        assert time.monotonic() - start == pytest.approx(5.0, abs=0.5)

    def test_interrupted_midway(self):
        state = init_app_state(0)
        token = CancelToken()
        ticks = []
        threading.Timer(2.5, token.cancel).start()
        start = time.monotonic()
        value = increase_continuously(state, 5, token, ticks.append)
        assert time.monotonic() - start < 3.5
        assert value in (4, 6)
        assert value % 2 == 0
        assert len(ticks) == value // 2  # observer/value consistency

    def test_observer_consistency_on_interrupt(self):
        state = init_app_state(100)
        token = CancelToken()
        ticks = []
        threading.Timer(1.3, token.cancel).start()
        value = increase_continuously(state, 3, token, ticks.append)
        assert value == 100 + 2 * len(ticks)

    def test_atomic_with_concurrent_increments(self):
        state = init_app_state(0)
        token = CancelToken()
        ticks = []
        loop = threading.Thread(
            target=increase_continuously, args=(state, 2, token, ticks.append)
        )
        loop.start()
        workers = [
            threading.Thread(target=state.increment, args=(2,)) for _ in range(100)
        ]
        for w in workers:
            w.start()
        for w in workers:
            w.join()
        loop.join()
        assert state.read() == 2 * len(ticks) + 200  # no lost updates
