import hypothesis.strategies as st
from hypothesis import settings

from alphaseq.oracle import all_compositions

settings.register_profile("suite", deadline=None, max_examples=150)
settings.load_profile("suite")

elements = st.integers(min_value=1, max_value=7)
sequences = st.lists(elements, max_size=8).map(tuple)
nonempty_sequences = st.lists(elements, min_size=1, max_size=8).map(tuple)


def sequences_up_to_degree(k):
    """The zero sequence plus every composition of 1..k, 2**k sequences total."""
    out = [()]
    for n in range(1, k + 1):
        out.extend(all_compositions(n))
    return out
