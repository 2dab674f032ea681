# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled orbit enumeration kernels; same contract as ``_pure``.

Weights are packed into ``std::string`` keys, one byte per coordinate
(value + 128), so byte-wise ordering matches lexicographic ordering of the
signed coordinates. Callers must guarantee ``|coordinate| <= 127``.
"""
from libcpp.vector cimport vector
from libcpp.string cimport string
from libcpp.algorithm cimport sort, unique, lower_bound

from flaghodge.errors import EnumerationBudgetExceeded

cdef enum:
    MAXRANK = 256


cdef vector[int] _columns(cartan, int r) except *:
    cdef vector[int] cols
    cols.resize(r * r)
    cdef int i, j
    for i in range(r):
        for j in range(r):
            cols[i * r + j] = cartan[j][i]
    return cols


cdef string _encode(start, int r) except *:
    cdef char buf[MAXRANK]
    cdef int j
    for j in range(r):
        buf[j] = <char>(<int>start[j] + 128)
    return string(<const char*>buf, <size_t>r)


cdef tuple _decode(const string& s, int r):
    cdef const unsigned char* p = <const unsigned char*>s.data()
    return tuple([<int>p[j] - 128 for j in range(r)])


cdef vector[string] _successors(const vector[string]& level, const vector[int]& cols, int r) noexcept nogil:
    cdef vector[string] out
    cdef char buf[MAXRANK]
    cdef size_t k
    cdef int i, j, ci
    cdef const unsigned char* mu
    for k in range(level.size()):
        mu = <const unsigned char*>level[k].data()
        for i in range(r):
            ci = <int>mu[i] - 128
            if ci > 0:
                for j in range(r):
                    buf[j] = <char>(<int>mu[j] - ci * cols[i * r + j])
                out.push_back(string(<const char*>buf, <size_t>r))
    sort(out.begin(), out.end())
    out.erase(unique(out.begin(), out.end()), out.end())
    return out


def orbit_level_sizes(cartan, start, long long budget):
    cdef int r = len(cartan)
    if r > MAXRANK:
        raise ValueError("rank too large for compiled kernel")
    cdef vector[int] cols = _columns(cartan, r)
    cdef vector[string] level
    level.push_back(_encode(start, r))
    cdef long long total = 0
    sizes = []
    while level.size() > 0:
        total += <long long>level.size()
        if total > budget:
            raise EnumerationBudgetExceeded(total, budget)
        sizes.append(<long long>level.size())
        with nogil:
            level = _successors(level, cols, r)
    return sizes


def orbit_levels(cartan, start, long long budget):
    cdef int r = len(cartan)
    if r > MAXRANK:
        raise ValueError("rank too large for compiled kernel")
    cdef vector[int] cols = _columns(cartan, r)
    cdef vector[string] level, nxt
    cdef vector[long long] parents
    cdef vector[int] letters
    cdef char buf[MAXRANK]
    cdef size_t k
    cdef int i, j, ci, istar
    cdef const unsigned char* nu
    cdef string key
    level.push_back(_encode(start, r))
    cdef long long total = 1
    if total > budget:
        raise EnumerationBudgetExceeded(total, budget)
    levels = [([_decode(level[0], r)], [-1], [-1])]
    while True:
        with nogil:
            nxt = _successors(level, cols, r)
        if nxt.size() == 0:
            break
        total += <long long>nxt.size()
        if total > budget:
            raise EnumerationBudgetExceeded(total, budget)
        parents.resize(nxt.size())
        letters.resize(nxt.size())
        with nogil:
            for k in range(nxt.size()):
                nu = <const unsigned char*>nxt[k].data()
                istar = -1
                for i in range(r):
                    if <int>nu[i] - 128 < 0:
                        istar = i
                        break
                ci = <int>nu[istar] - 128
                for j in range(r):
                    buf[j] = <char>(<int>nu[j] - ci * cols[istar * r + j])
                key = string(<const char*>buf, <size_t>r)
                parents[k] = lower_bound(level.begin(), level.end(), key) - level.begin()
                letters[k] = istar
        levels.append((
            [_decode(nxt[k], r) for k in range(nxt.size())],
            [parents[k] for k in range(nxt.size())],
            [letters[k] for k in range(nxt.size())],
        ))
        level.swap(nxt)
    return levels
