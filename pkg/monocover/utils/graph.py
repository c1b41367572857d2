import graphviz as gv


def plan_graph(steps):
    """ A graphviz digraph of a construction plan.

    Each step is a node and points to the step that consumes its covering,
    so the base sits at the top and the final covering at the bottom.
    """
    g = gv.Digraph()
    for idx, step in enumerate(steps):
        shape = 'box' if step.kind.startswith('base') else 'oval'
        g.node(str(idx), str(step), shape=shape)
        if idx: g.edge(str(idx - 1), str(idx))
    return g

def show_plan(steps, filename=None):
    dot = plan_graph(steps)
    dot.render(filename=filename, format='png', view=True, cleanup=bool(filename))
    return dot
