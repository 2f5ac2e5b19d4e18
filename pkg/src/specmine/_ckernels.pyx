# Compiled twin of _pykernels.py; see that module for the data layout.
from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.stdlib cimport malloc, free
from libc.string cimport memset


cdef class _Walker:
    cdef const int[:] offsets
    cdef const int[:] labels
    cdef const int[:] targets
    cdef const unsigned char[:] accepting
    cdef const int[:] f_delta
    cdef const unsigned char[:] f_accepting
    cdef int limit, n_labels, m
    cdef unsigned char* usage
    cdef int* word
    cdef int depth
    cdef set words
    cdef dict memo

    def __cinit__(self, offsets, labels, targets, accepting, int limit):
        self.offsets = offsets
        self.labels = labels
        self.targets = targets
        self.accepting = accepting
        self.limit = limit
        self.m = len(targets)
        self.usage = <unsigned char*> malloc(self.m + 1)
        self.word = <int*> malloc((self.m * limit + 1) * sizeof(int))
        if self.usage == NULL or self.word == NULL:
            raise MemoryError()
        memset(self.usage, 0, self.m + 1)
        self.depth = 0

    def __dealloc__(self):
        free(self.usage)
        free(self.word)

    cdef void _collect(self):
        cdef int i
        cdef tuple w = tuple([self.word[i] for i in range(self.depth)])
        self.words.add(w)

    cdef void _enum(self, int s):
        cdef int j, t, lab
        if self.accepting[s]:
            self._collect()
        for j in range(self.offsets[s], self.offsets[s + 1]):
            if self.usage[j] >= self.limit:
                continue
            self.usage[j] += 1
            lab = self.labels[j]
            t = self.targets[j]
            if lab >= 0:
                self.word[self.depth] = lab
                self.depth += 1
            self._enum(t)
            if lab >= 0:
                self.depth -= 1
            self.usage[j] -= 1

    cdef tuple _count(self, int s, int f):
        cdef int j, g
        cdef object key = (s, f, PyBytes_FromStringAndSize(<char*> self.usage, self.m))
        cdef object hit = self.memo.get(key)
        if hit is not None:
            return <tuple> hit
        cdef object total = 0
        cdef object accepted = 0
        cdef tuple sub
        if self.accepting[s]:
            total = 1
            if f >= 0 and self.f_accepting[f]:
                accepted = 1
        for j in range(self.offsets[s], self.offsets[s + 1]):
            if self.usage[j] >= self.limit:
                continue
            if f >= 0:
                g = self.f_delta[f * self.n_labels + self.labels[j]]
            else:
                g = -1
            self.usage[j] += 1
            sub = self._count(self.targets[j], g)
            self.usage[j] -= 1
            total = total + sub[0]
            accepted = accepted + sub[1]
        cdef tuple result = (total, accepted)
        self.memo[key] = result
        return result


def enumerate_words(n, initial, accepting, offsets, labels, targets, limit):
    cdef _Walker w = _Walker(offsets, labels, targets, accepting, limit)
    w.words = set()
    w._enum(initial)
    return w.words


def count_words(n, initial, accepting, offsets, labels, targets, limit,
                f_initial, f_accepting, f_delta, n_labels):
    cdef _Walker w = _Walker(offsets, labels, targets, accepting, limit)
    w.f_delta = f_delta
    w.f_accepting = f_accepting
    w.n_labels = n_labels
    w.memo = {}
    return w._count(initial, f_initial)
