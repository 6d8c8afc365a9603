import pytest

from multiforce.model import (
    Edge,
    MultiplexError,
    MultiplexNetwork,
    Vertex,
    canonical_edge,
)


def test_canonical_edge_orders_endpoints():
    a = Vertex(3, 0)
    b = Vertex(1, 0)
    assert canonical_edge(a, b) == Edge(b, a)
    assert canonical_edge(b, a) == Edge(b, a)
    # layer dominates actor in the ordering
    assert canonical_edge(Vertex(0, 1), Vertex(5, 0)) == Edge(Vertex(0, 1), Vertex(5, 0))


def test_ids_are_dense_and_labels_round_trip():
    net = MultiplexNetwork()
    assert net.add_actor("alice") == 0
    assert net.add_actor("bob") == 1
    assert net.add_layer("work") == 0
    assert net.add_layer("home") == 1
    assert net.actor_label(1) == "bob"
    assert net.layer_label(0) == "work"
    assert net.actor_id("alice") == 0
    assert net.layer_id("home") == 1
    assert net.actor_labels() == ("alice", "bob")
    assert net.layer_labels() == ("work", "home")


def test_duplicate_and_empty_labels_rejected():
    net = MultiplexNetwork()
    net.add_actor("a")
    with pytest.raises(MultiplexError):
        net.add_actor("a")
    with pytest.raises(MultiplexError):
        net.add_actor("")
    net.add_layer("l")
    with pytest.raises(MultiplexError):
        net.add_layer("l")
    with pytest.raises(MultiplexError):
        net.add_layer("")


def test_unknown_label_lookup_raises():
    net = MultiplexNetwork()
    with pytest.raises(MultiplexError):
        net.actor_id("ghost")
    with pytest.raises(MultiplexError):
        net.layer_id("ghost")


def test_add_vertex_is_idempotent():
    net = MultiplexNetwork()
    a = net.add_actor("a")
    l = net.add_layer("l")
    v1 = net.add_vertex(a, l)
    v2 = net.add_vertex(a, l)
    assert v1 == v2 == Vertex(a, l)
    assert net.vertex_count == 1


def test_add_vertex_requires_known_ids():
    net = MultiplexNetwork()
    a = net.add_actor("a")
    l = net.add_layer("l")
    with pytest.raises(MultiplexError):
        net.add_vertex(a + 1, l)
    with pytest.raises(MultiplexError):
        net.add_vertex(a, l + 1)


def test_add_edge_normalizes_and_dedupes():
    net = MultiplexNetwork()
    a = net.add_actor("a")
    b = net.add_actor("b")
    l = net.add_layer("l")
    va = net.add_vertex(a, l)
    vb = net.add_vertex(b, l)
    e1 = net.add_edge(vb, va)
    e2 = net.add_edge(va, vb)
    assert e1 == e2 == Edge(va, vb)
    assert net.edge_count == 1
    assert net.has_edge(vb, va)


def test_add_edge_rejects_self_loop_cross_layer_unknown():
    net = MultiplexNetwork()
    a = net.add_actor("a")
    b = net.add_actor("b")
    l0 = net.add_layer("l0")
    l1 = net.add_layer("l1")
    va = net.add_vertex(a, l0)
    vb = net.add_vertex(b, l1)
    with pytest.raises(MultiplexError, match="self-loop"):
        net.add_edge(va, va)
    with pytest.raises(MultiplexError, match="cross-layer"):
        net.add_edge(va, vb)
    with pytest.raises(MultiplexError, match="unknown vertex"):
        net.add_edge(va, Vertex(b, l0))


def test_vertices_sorted_is_layer_major():
    net = MultiplexNetwork()
    actors = [net.add_actor(f"a{i}") for i in range(3)]
    layers = [net.add_layer(f"l{i}") for i in range(2)]
    # insert in scrambled order
    net.add_vertex(actors[2], layers[1])
    net.add_vertex(actors[0], layers[1])
    net.add_vertex(actors[1], layers[0])
    net.add_vertex(actors[0], layers[0])
    assert net.vertices_sorted() == (
        Vertex(0, 0),
        Vertex(1, 0),
        Vertex(0, 1),
        Vertex(2, 1),
    )


def test_edges_sorted_order():
    net = MultiplexNetwork()
    actors = [net.add_actor(f"a{i}") for i in range(3)]
    layers = [net.add_layer(f"l{i}") for i in range(2)]
    for layer in layers:
        for actor in actors:
            net.add_vertex(actor, layer)
    net.add_edge(Vertex(1, 1), Vertex(2, 1))
    net.add_edge(Vertex(0, 1), Vertex(1, 1))
    net.add_edge(Vertex(2, 0), Vertex(0, 0))
    order = net.edges_sorted()
    keys = [(e.u.layer, e.u.actor, e.v.actor) for e in order]
    assert keys == sorted(keys)
    assert keys[0] == (0, 0, 2)


def test_replicas_in_layer_order():
    net = MultiplexNetwork()
    a = net.add_actor("a")
    b = net.add_actor("b")
    layers = [net.add_layer(f"l{i}") for i in range(3)]
    net.add_vertex(a, layers[2])
    net.add_vertex(a, layers[0])
    net.add_vertex(b, layers[1])
    assert net.replicas(a) == (Vertex(a, 0), Vertex(a, 2))
    assert net.replicas(b) == (Vertex(b, 1),)


def test_actor_need_not_appear_on_every_layer():
    net = MultiplexNetwork()
    a = net.add_actor("a")
    net.add_layer("l0")
    net.add_layer("l1")
    net.add_vertex(a, 0)
    assert net.has_vertex(Vertex(a, 0))
    assert not net.has_vertex(Vertex(a, 1))
    assert net.replicas(a) == (Vertex(a, 0),)


def test_layer_subgraph_filters_by_layer():
    net = MultiplexNetwork()
    actors = [net.add_actor(f"a{i}") for i in range(3)]
    layers = [net.add_layer(f"l{i}") for i in range(2)]
    for layer in layers:
        for actor in actors:
            net.add_vertex(actor, layer)
    net.add_edge(Vertex(0, 0), Vertex(1, 0))
    net.add_edge(Vertex(1, 1), Vertex(2, 1))
    vertices, edges = net.layer_subgraph(0)
    assert all(v.layer == 0 for v in vertices)
    assert len(vertices) == 3
    assert edges == (Edge(Vertex(0, 0), Vertex(1, 0)),)


def test_layer_subgraph_of_empty_layer():
    net = MultiplexNetwork()
    net.add_actor("a")
    empty = net.add_layer("l")
    assert net.layer_subgraph(empty) == ((), ())


def test_label_structure_ignores_insertion_history():
    def build(order):
        net = MultiplexNetwork()
        for label in order:
            net.add_actor(label)
        net.add_layer("l")
        for label in order:
            net.add_vertex(net.actor_id(label), 0)
        net.add_edge(
            Vertex(net.actor_id("x"), 0), Vertex(net.actor_id("y"), 0)
        )
        return net

    one = build(["x", "y", "z"])
    two = build(["z", "y", "x"])
    assert one.label_structure() == two.label_structure()


def test_repr_mentions_counts():
    net = MultiplexNetwork()
    net.add_actor("a")
    net.add_layer("l")
    net.add_vertex(0, 0)
    text = repr(net)
    assert "actors=1" in text and "vertices=1" in text
