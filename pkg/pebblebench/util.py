import time


def millis():
    """Return the time in milliseconds"""
    return time.perf_counter() * 1000


def time_since_millis(previous_time):
    """Return the time in milliseconds from the previous_time argument"""
    return millis() - previous_time


def iter_bits(mask):
    """Yield the indices of the set bits of `mask` in increasing order

    Args:
        mask (int): Bit set

    Returns:
        Iterator of int
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_count(mask):
    """Return the number of set bits of `mask`"""
    return bin(mask).count('1')
