"""The Grail motive as a PL-network, written out as Graphviz DOT.

Pipe into ``dot -Tpng`` to draw it.
"""

from hexdual.hexatonic import eval_word, grail_dot, grail_network, reduce_word
from hexdual.triads import parse_triad

for src, dst, word in grail_network():
    print(f"{src:>2} --{word}--> {dst}")

eb = parse_triad("Eb")
print("PLP.L.PLP reduces to", repr(reduce_word("PLPLPLP")), "and sends Eb to", eval_word("PLPLPLP", eb).name)
print()
print(grail_dot(), end="")
