"""graph6 against networkx as the independent reference encoder."""

import random

import networkx as nx
import pytest
from hypothesis import given

from srdf.graph import FamilySpec, Graph, Kind, complete, empty, generate
from srdf.graph6 import Graph6Error, _decode_order, _encode_order, parse_graph6, write_graph6

from conftest import graphs


def reference_encode(g: Graph) -> str:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).decode().strip()


def reference_corpus(count: int, seed: int = 7) -> list[str]:
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = 1 + i % 62
        p = rng.random()
        h = nx.gnp_random_graph(n, p, seed=rng.randrange(2**31))
        out.append(nx.to_graph6_bytes(h, header=False).decode().strip())
    return out


def test_known_strings():
    assert parse_graph6("Bw").neighbors == complete(3).neighbors
    assert parse_graph6("B?").neighbors == empty(3).neighbors
    assert write_graph6(empty(1)) == "@"
    assert write_graph6(complete(3)) == reference_encode(complete(3))


def test_header_accepted_on_input():
    assert parse_graph6(">>graph6<<Bw").size == 3
    assert parse_graph6("Bw\n").size == 3


def test_bit_order_is_column_major_over_pairs():
    # only the pair (0,2) set: bit index 1 of the upper triangle
    g = Graph.from_edges(3, [(0, 2)])
    assert write_graph6(g) == chr(63 + 3) + chr(63 + 0b010000)
    assert write_graph6(g) == reference_encode(g)


def test_multi_byte_order_forms():
    for n in (63, 100, 500):
        s = write_graph6(empty(n))
        assert parse_graph6(s).order == n
        assert s == reference_encode(empty(n))
    assert write_graph6(empty(63))[:4] == "~" + chr(63) + chr(63 + 0) + chr(63 + 63)
    # the eight-byte size form, checked on the size field alone
    assert _encode_order(258047)[0] == "~" and _encode_order(258047)[1] != "~"
    assert _encode_order(258048) == "~~???~??"
    assert _encode_order(460175067) == "~~?ZZZZZ"  # worked example from the format description
    assert _decode_order(_encode_order(258048)) == (258048, 8)
    g = generate(FamilySpec(Kind.WHEEL, n=70))
    assert write_graph6(g) == reference_encode(g)


@pytest.mark.parametrize("text,offset", [
    ("B", 1),        # no adjacency bytes
    ("Bw?", 2),      # trailing data
    ("B\x7f", 1),    # outside the printable range
    ("Bx", 1),       # padding bits set
    ("~?", 2),       # truncated multi-byte size
    ("", 0),
])
def test_malformed_input_reports_offset(text, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(text)
    assert info.value.offset == offset


def test_reference_corpus_round_trip():
    corpus = reference_corpus(620)
    assert len(corpus) >= 500
    for s in corpus:
        g = parse_graph6(s)
        assert write_graph6(g) == s
        h = nx.from_graph6_bytes(s.encode())
        assert set(g.edges()) == {tuple(sorted(e)) for e in h.edges()}


def test_family_graphs_round_trip():
    specs = [FamilySpec(Kind.CYCLE, n=n) for n in range(3, 63)]
    specs += [FamilySpec(Kind.WHEEL, n=n) for n in range(3, 62)]
    specs += [FamilySpec(Kind.FAN, n=n) for n in range(1, 62)]
    specs += [FamilySpec(Kind.FRIENDSHIP, m=m) for m in range(1, 31)]
    specs += [FamilySpec(Kind.JOIN_CYCLES, m=m, n=62 - m) for m in range(3, 32)]
    for spec in specs:
        g = generate(spec)
        assert parse_graph6(write_graph6(g)).neighbors == g.neighbors


@given(graphs(min_order=0, max_order=12))
def test_write_matches_reference(g):
    if g.order:
        assert write_graph6(g) == reference_encode(g)
    assert parse_graph6(write_graph6(g)).neighbors == g.neighbors
