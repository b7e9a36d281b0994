"""Square integer matrices and their exact determinants."""


class IMatrix:
    """Immutable square matrix of Python ints."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("IMatrix must be square")
        self.rows = rows

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def size(self):
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, IMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def to_json(self):
        return [[str(x) for x in row] for row in self.rows]

    def __repr__(self):
        return f"IMatrix({[list(r) for r in self.rows]!r})"


def det(m):
    """Determinant by fraction-free (Bareiss) elimination."""
    if not isinstance(m, IMatrix):
        m = IMatrix(m)
    n = m.size
    if n == 0:
        return 1
    a = [list(row) for row in m.rows]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]
