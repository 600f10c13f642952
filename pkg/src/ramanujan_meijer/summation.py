"""Compensated (Neumaier) accumulation for complex series."""


class CompensatedSum:
    """Running complex sum with Neumaier error compensation.

    Terms must be added in index order; the result is then independent of
    how the caller batches them.
    """

    __slots__ = ("_re", "_im", "_cre", "_cim")

    def __init__(self):
        self._re = self._im = 0.0
        self._cre = self._cim = 0.0

    @staticmethod
    def _step(s, c, x):
        t = s + x
        if abs(s) >= abs(x):
            c += (s - t) + x
        else:
            c += (x - t) + s
        return t, c

    def add(self, term):
        term = complex(term)
        self._re, self._cre = self._step(self._re, self._cre, term.real)
        self._im, self._cim = self._step(self._im, self._cim, term.imag)

    def extend(self, terms):
        for t in terms:
            self.add(t)

    @property
    def value(self):
        return complex(self._re + self._cre, self._im + self._cim)


def compensated_sum(terms):
    acc = CompensatedSum()
    acc.extend(terms)
    return acc.value
