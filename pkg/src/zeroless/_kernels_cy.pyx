# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled digit kernels; a drop-in twin of the pure-Python module.

Digits are kept in C int64 buffers inside the hot loops, so the compiled
path only covers bases small enough for the intermediates (products up
to k*k + k) to fit: 2 <= k <= 2**31 - 1. Anything outside that range is
delegated to the pure module, which has no such limit.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

from zeroless import _kernels_py as _py

cdef long long _MAXK = 2147483647


cdef long long* _alloc(Py_ssize_t n) except NULL:
    cdef long long* p
    if n < 1:
        n = 1
    p = <long long*> PyMem_Malloc(n * sizeof(long long))
    if p == NULL:
        raise MemoryError()
    return p


cdef Py_ssize_t _fill(object digits, long long* buf) except -1:
    # least-significant-first copy of a most-significant-first sequence
    cdef Py_ssize_t n = len(digits), i
    for i in range(n):
        buf[n - 1 - i] = digits[i]
    return n


cdef object _emit(long long* buf, Py_ssize_t n):
    # back to a most-significant-first Python list
    out = []
    cdef Py_ssize_t i
    for i in range(n - 1, -1, -1):
        out.append(buf[i])
    return out


cdef Py_ssize_t _add_lsf(long long* a, Py_ssize_t la, long long* b, Py_ssize_t lb,
                         long long k, long long* out) noexcept:
    cdef Py_ssize_t n = la if la > lb else lb
    cdef Py_ssize_t i
    cdef long long carry = 0, s
    for i in range(n):
        s = carry
        if i < la:
            s += a[i]
        if i < lb:
            s += b[i]
        # s >= 1 here, so truncating division is floor division
        carry = (s - 1) / k
        out[i] = s - carry * k
    if carry:
        out[n] = carry  # carry stays in {1, 2} <= k
        n += 1
    return n


cdef Py_ssize_t _scale_lsf(long long* a, Py_ssize_t la, long long d, long long k,
                           long long* out) noexcept:
    cdef Py_ssize_t i
    cdef long long carry = 0, p, dig
    for i in range(la):
        p = a[i] * d + carry
        dig = (p - 1) % k + 1
        carry = (p - dig) / k
        out[i] = dig
    if carry:
        out[la] = carry  # bounded by k, a single digit
        return la + 1
    return la


cdef Py_ssize_t _pred_lsf(long long* a, Py_ssize_t la, long long k, long long* out) noexcept:
    cdef Py_ssize_t i = 0, j
    while i < la and a[i] == 1:
        out[i] = k
        i += 1
    if i == la:
        return la - 1  # borrow escaped: the leftmost position vanishes
    out[i] = a[i] - 1
    for j in range(i + 1, la):
        out[j] = a[j]
    return la


def add_digits(a, b, k):
    """Zeroless addition sweep; absent positions contribute nothing."""
    if not 2 <= k <= _MAXK:
        return _py.add_digits(a, b, k)
    cdef long long kk = k
    cdef long long* pa = NULL
    cdef long long* pb = NULL
    cdef long long* po = NULL
    cdef Py_ssize_t la, lb, n
    try:
        pa = _alloc(len(a))
        la = _fill(a, pa)
        pb = _alloc(len(b))
        lb = _fill(b, pb)
        po = _alloc((la if la > lb else lb) + 1)
        n = _add_lsf(pa, la, pb, lb, kk, po)
        return _emit(po, n)
    finally:
        PyMem_Free(pa)
        PyMem_Free(pb)
        PyMem_Free(po)


def scale_digits(a, d, k):
    """Multiply a zeroless numeral by the single digit d in [1, k]."""
    if not 2 <= k <= _MAXK:
        return _py.scale_digits(a, d, k)
    cdef long long kk = k, dd = d
    cdef long long* pa = NULL
    cdef long long* po = NULL
    cdef Py_ssize_t la, n
    try:
        pa = _alloc(len(a))
        la = _fill(a, pa)
        po = _alloc(la + 1)
        n = _scale_lsf(pa, la, dd, kk, po)
        return _emit(po, n)
    finally:
        PyMem_Free(pa)
        PyMem_Free(po)


def successor_digits(a, k):
    if not 2 <= k <= _MAXK:
        return _py.successor_digits(a, k)
    cdef long long kk = k
    cdef Py_ssize_t n = len(a), i
    out = list(a)
    for i in range(n - 1, -1, -1):
        if <long long> out[i] < kk:
            out[i] = out[i] + 1
            return out
        out[i] = 1
    out.insert(0, 1)
    return out


def predecessor_digits(a, k):
    if not 2 <= k <= _MAXK:
        return _py.predecessor_digits(a, k)
    if not len(a):
        raise ValueError("zero has no predecessor")
    cdef long long kk = k
    cdef Py_ssize_t n = len(a), i
    out = list(a)
    for i in range(n - 1, -1, -1):
        if <long long> out[i] > 1:
            out[i] = out[i] - 1
            return out
        out[i] = kk
    del out[0]  # borrow escaped: the leftmost position vanishes
    return out


def multiply_by_base_digits(a, k):
    if not 2 <= k <= _MAXK:
        return _py.multiply_by_base_digits(a, k)
    if not len(a):
        return []
    cdef long long kk = k
    cdef long long* pa = NULL
    cdef long long* po = NULL
    cdef Py_ssize_t la, n
    try:
        pa = _alloc(len(a))
        la = _fill(a, pa)
        po = _alloc(la + 1)
        n = _pred_lsf(pa, la, kk, po + 1)
        po[0] = kk
        return _emit(po, n + 1)
    finally:
        PyMem_Free(pa)
        PyMem_Free(po)


def multiply_digits(x, y, k):
    """Schoolbook product via left-to-right accumulation over y's digits."""
    if not 2 <= k <= _MAXK:
        return _py.multiply_digits(x, y, k)
    if not len(x) or not len(y):
        return []
    cdef long long kk = k
    cdef long long* px = NULL
    cdef long long* ps = NULL
    cdef long long* acc = NULL
    cdef long long* wrk = NULL
    cdef long long* tmp = NULL
    cdef Py_ssize_t lx, ly = len(y), na = 0, ns, j, cap
    cdef long long d
    try:
        px = _alloc(len(x))
        lx = _fill(x, px)
        cap = lx + ly + 2
        ps = _alloc(lx + 1)
        acc = _alloc(cap)
        wrk = _alloc(cap)
        for j in range(ly):
            d = y[j]
            if na:
                # acc <- acc * base: predecessor with the base digit appended
                na = _pred_lsf(acc, na, kk, wrk + 1) + 1
                wrk[0] = kk
                tmp = acc; acc = wrk; wrk = tmp
            ns = _scale_lsf(px, lx, d, kk, ps)
            na = _add_lsf(acc, na, ps, ns, kk, wrk)
            tmp = acc; acc = wrk; wrk = tmp
        return _emit(acc, na)
    finally:
        PyMem_Free(px)
        PyMem_Free(ps)
        PyMem_Free(acc)
        PyMem_Free(wrk)


def lex_to_zero_digits(a, k):
    """Carry sweep turning zeroless digits into canonical with-zero digits."""
    if not 2 <= k <= _MAXK:
        return _py.lex_to_zero_digits(a, k)
    cdef long long kk = k, v, carry = 0
    cdef Py_ssize_t n = len(a), i
    out = [0] * n
    for i in range(n - 1, -1, -1):
        v = <long long> a[i] + carry
        if v >= kk:
            out[i] = v - kk
            carry = 1
        else:
            out[i] = v
            carry = 0
    if carry:
        out.insert(0, 1)
    return out if out else [0]


def zero_to_lex_digits(a, k):
    """Borrow sweep turning canonical with-zero digits into zeroless digits."""
    if not 2 <= k <= _MAXK or not len(a):
        return _py.zero_to_lex_digits(a, k)
    cdef long long kk = k, v, borrow = 0
    cdef Py_ssize_t n = len(a), i
    out = []
    for i in range(n - 1, 0, -1):
        v = <long long> a[i] - borrow
        if v <= 0:
            out.append(v + kk)
            borrow = 1
        else:
            out.append(v)
            borrow = 0
    v = <long long> a[0] - borrow
    if v > 0:
        out.append(v)
    out.reverse()
    return out


horner_value = _py.horner_value  # bignum accumulation; CPython is already C here
