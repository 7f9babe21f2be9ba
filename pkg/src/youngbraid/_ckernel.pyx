# cython: language_level=3, boundscheck=False, wraparound=False
# distutils: language = c++
"""Compiled word kernels; same API and semantics as ``_pykernel``."""

from libcpp.vector cimport vector

ctypedef vector[int] ivec


cdef ivec _to_vec(object w):
    cdef ivec v
    v.reserve(len(w))
    for a in w:
        v.push_back(<int>a)
    return v


cdef tuple _vec_tuple(const ivec& v):
    cdef Py_ssize_t k, n = v.size()
    cdef list out = [None] * n
    for k in range(n):
        out[k] = v[k]
    return tuple(out)


cdef inline void _push(ivec& out, int x) nogil:
    if out.size() > 0 and out.back() == -x:
        out.pop_back()
    else:
        out.push_back(x)


cdef void _append(ivec& out, const ivec& w) nogil:
    # both reduced: only the seam can cancel
    cdef size_t k = 0, n = w.size()
    while k < n and out.size() > 0 and out.back() == -w[k]:
        out.pop_back()
        k += 1
    out.insert(out.end(), w.begin() + k, w.end())


cdef void _append_inverse(ivec& out, const ivec& w) nogil:
    cdef size_t k = w.size()
    while k > 0 and out.size() > 0 and out.back() == w[k - 1]:
        out.pop_back()
        k -= 1
    while k > 0:
        k -= 1
        out.push_back(-w[k])


cdef ivec _conj(const ivec& g, const ivec& h) nogil:
    # h^-1 g h
    cdef ivec out
    out.reserve(g.size() + 2 * h.size())
    _append_inverse(out, h)
    _append(out, g)
    _append(out, h)
    return out


cdef ivec _conj_inv(const ivec& h, const ivec& g) nogil:
    # g h g^-1
    cdef ivec out
    out.reserve(h.size() + 2 * g.size())
    _append(out, g)
    _append(out, h)
    _append_inverse(out, g)
    return out


def reduce_word(letters):
    cdef ivec out
    for a in letters:
        _push(out, <int>a)
    return _vec_tuple(out)


def inverse(w):
    return tuple([-a for a in reversed(w)])


def multiply(a, b):
    # inputs must already be reduced, as in the Python kernel
    cdef ivec out = _to_vec(a)
    cdef ivec vb = _to_vec(b)
    _append(out, vb)
    return _vec_tuple(out)


def conjugate(g, h):
    return _vec_tuple(_conj(_to_vec(g), _to_vec(h)))


def apply_braid(braid, entries, Py_ssize_t limit=0):
    cdef vector[ivec] t
    cdef ivec letters = _to_vec(braid)
    cdef ivec c
    cdef Py_ssize_t k, i, n, before, total = 0
    cdef int s
    cdef bint over = False
    for w in entries:
        t.push_back(_to_vec(w))
        total += len(w)
    n = letters.size()
    with nogil:
        for k in range(n - 1, -1, -1):
            s = letters[k]
            i = (s if s > 0 else -s) - 1
            before = t[i].size() + t[i + 1].size()
            if s > 0:
                # (g, h) -> (h, h^-1 g h)
                c = _conj(t[i], t[i + 1])
                t[i].swap(t[i + 1])
                t[i + 1].swap(c)
            else:
                # (g, h) -> (g h g^-1, g)
                c = _conj_inv(t[i + 1], t[i])
                t[i + 1].swap(t[i])
                t[i].swap(c)
            if limit > 0:
                total += <Py_ssize_t>(t[i].size() + t[i + 1].size()) - before
                if total > limit:
                    over = True
                    break
    if over:
        raise OverflowError(f"tuple length {total} exceeds limit {limit}")
    return [_vec_tuple(t[k]) for k in range(<Py_ssize_t>t.size())]


cdef ivec _substitute(const ivec& w, const vector[ivec]& images) nogil:
    cdef ivec out
    cdef size_t k
    cdef int a
    for k in range(w.size()):
        a = w[k]
        if a > 0:
            _append(out, images[a - 1])
        else:
            _append_inverse(out, images[-a - 1])
    return out


def substitute(w, images):
    cdef vector[ivec] imgs
    for img in images:
        imgs.push_back(_to_vec(img))
    return _vec_tuple(_substitute(_to_vec(w), imgs))


def substitute_all(entries, images):
    cdef vector[ivec] imgs
    cdef vector[ivec] ws
    cdef vector[ivec] res
    cdef size_t k
    for img in images:
        imgs.push_back(_to_vec(img))
    for w in entries:
        ws.push_back(_to_vec(w))
    res.resize(ws.size())
    with nogil:
        for k in range(ws.size()):
            res[k] = _substitute(ws[k], imgs)
    return [_vec_tuple(res[k]) for k in range(res.size())]


def total_length(entries):
    cdef Py_ssize_t total = 0
    for w in entries:
        total += len(w)
    return total


def first_admissible(entries, block_of):
    cdef ivec blocks = _to_vec(block_of)
    cdef ivec w
    cdef size_t p
    cdef int a, b, i, j
    for entry in entries:
        w = _to_vec(entry)
        if w.size() < 2:
            continue
        for p in range(w.size() - 1):
            a = w[p]
            b = w[p + 1]
            if (a > 0) != (b > 0):
                i = a if a > 0 else -a
                j = b if b > 0 else -b
                if blocks[i - 1] == blocks[j - 1]:
                    return i, j, 1 if a > 0 else -1
    return None
