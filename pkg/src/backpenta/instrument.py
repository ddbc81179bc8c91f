"""Operation-counting scalar used to check the solver's linear cost.

Wraps any numeric value; every field operation bumps a shared counter.
Running the banded factor/solve over CountingScalar values measures the
exact number of scalar operations without touching the solver code.
"""

from __future__ import annotations


class OpCounter:
    __slots__ = ("count",)

    def __init__(self):
        self.count = 0


class CountingScalar:
    __slots__ = ("value", "counter")

    def __init__(self, value, counter: OpCounter):
        self.value = value
        self.counter = counter

    def _wrap(self, value):
        return CountingScalar(value, self.counter)

    def _unwrap(self, other):
        return other.value if isinstance(other, CountingScalar) else other

    def __add__(self, other):
        self.counter.count += 1
        return self._wrap(self.value + self._unwrap(other))

    __radd__ = __add__

    def __sub__(self, other):
        self.counter.count += 1
        return self._wrap(self.value - self._unwrap(other))

    def __rsub__(self, other):
        self.counter.count += 1
        return self._wrap(self._unwrap(other) - self.value)

    def __mul__(self, other):
        self.counter.count += 1
        return self._wrap(self.value * self._unwrap(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        self.counter.count += 1
        return self._wrap(self.value / self._unwrap(other))

    def __rtruediv__(self, other):
        self.counter.count += 1
        return self._wrap(self._unwrap(other) / self.value)

    def __neg__(self):
        self.counter.count += 1
        return self._wrap(-self.value)

    def __bool__(self):
        return bool(self.value)

    def __abs__(self):
        return abs(self.value)

    def __repr__(self):
        return f"CountingScalar({self.value!r})"
