"""
:module: FOLCALC.util.linalg
:license: AGPL-3.0
:purpose:
    Exact linear algebra over the rationals for the graded slice computations.
    :class:`~.ExactLinearMap` is a sparse rational matrix between two labelled
    bases (monomials, monomial-coefficient forms, ...) backed by
    :class:`~sympy.polys.matrices.DomainMatrix` over QQ.
"""
import logging
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Logger = logging.getLogger(__name__)


class ExactLinearMap(object):
    """Exact rational linear map between labelled bases

    :param domain: labels of the domain basis (column order)
    :type domain: list
    :param codomain: labels of the codomain basis (row order)
    :type codomain: list
    :param columns: one {codomain label: rational} dict per domain label
    :type columns: list of dict
    """
    def __init__(self, domain, codomain, columns):
        if len(columns) != len(domain):
            raise ValueError('one column is needed per domain label')
        self.domain = list(domain)
        self.codomain = list(codomain)
        self._row_index = {_l: _i for _i, _l in enumerate(self.codomain)}
        rows = {}
        for _j, col in enumerate(columns):
            for label, value in col.items():
                if not value:
                    continue
                try:
                    _i = self._row_index[label]
                except KeyError:
                    raise KeyError(f'column {_j} has entry outside the codomain basis: {label}')
                rows.setdefault(_i, {})[_j] = QQ.convert(value)
        self.matrix = DomainMatrix(rows, self.shape, QQ)
        Logger.debug(f'linear map of shape {self.shape}')

    @property
    def shape(self):
        return (len(self.codomain), len(self.domain))

    def __repr__(self):
        return f'ExactLinearMap(shape={self.shape}, rank={self.rank()})'

    def is_empty(self):
        return self.shape[0] == 0 or self.shape[1] == 0

    def rank(self):
        """Rank of the map; 0 for empty shapes"""
        if self.is_empty():
            return 0
        return int(self.matrix.rank())

    def kernel(self):
        """Basis of the kernel as rational coordinate vectors over **domain**

        :returns: **basis** (*list* of *list*)
        """
        nrows, ncols = self.shape
        if ncols == 0:
            return []
        if nrows == 0:
            return [[QQ.one if _i == _j else QQ.zero for _i in range(ncols)]
                    for _j in range(ncols)]
        null = self.matrix.nullspace()
        return [list(_r) for _r in null.to_list()]

    def image(self):
        """Basis of the image as rational coordinate vectors over **codomain**
        (rows of the reduced echelon form of the transpose)"""
        if self.is_empty():
            return []
        rref, pivots = self.matrix.transpose().rref()
        return [list(_r) for _r in rref.to_list()[:len(pivots)]]

    def compose(self, other):
        """Return the matrix of self after other as a :class:`DomainMatrix`"""
        if other.shape[0] != self.shape[1]:
            raise ValueError(f'cannot compose shapes {self.shape} and {other.shape}')
        return self.matrix.to_sparse().matmul(other.matrix.to_sparse())

    def composes_to_zero(self, other):
        """True if self after other is the zero map"""
        if self.is_empty() or other.is_empty():
            return True
        return self.compose(other).is_zero_matrix

    def apply(self, vector):
        """Apply the map to a coordinate vector over **domain**"""
        if len(vector) != self.shape[1]:
            raise ValueError('vector length does not match the domain')
        if self.shape[0] == 0:
            return []
        col = DomainMatrix([[QQ.convert(_v)] for _v in vector], (len(vector), 1), QQ)
        return [_r[0] for _r in (self.matrix.to_dense() * col).to_list()]


def vector_space_rank(vectors, length):
    """Rank of a list of coordinate vectors of a given length"""
    if len(vectors) == 0 or length == 0:
        return 0
    return int(DomainMatrix([[QQ.convert(_v) for _v in vec] for vec in vectors],
                            (len(vectors), length), QQ).rank())


def row_reduce(vectors, length):
    """Reduced echelon basis of the span of **vectors**"""
    if len(vectors) == 0 or length == 0:
        return []
    dm = DomainMatrix([[QQ.convert(_v) for _v in vec] for vec in vectors],
                      (len(vectors), length), QQ)
    rref, pivots = dm.rref()
    return [list(_r) for _r in rref.to_list()[:len(pivots)]]


def complete_basis(sub_vectors, vectors, length):
    """Pick members of **vectors** completing a basis of span(sub_vectors)
    to a basis of span(sub_vectors + vectors)

    :returns: **extra** (*list*) -- the chosen members of **vectors**
    """
    current = list(sub_vectors)
    rank = vector_space_rank(current, length)
    extra = []
    for vec in vectors:
        trial = current + [vec]
        trial_rank = vector_space_rank(trial, length)
        if trial_rank > rank:
            current = trial
            rank = trial_rank
            extra.append(vec)
    return extra
