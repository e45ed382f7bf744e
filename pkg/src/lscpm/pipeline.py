"""Streaming wiring: clique enumeration feeding percolation across threads.

The enumeration producer and the percolation consumer run on separate threads
joined by a bounded FIFO, so neither stage ever holds the full clique set.
The FIFO preserves order, so results are identical to sequential mode.
"""

from __future__ import annotations

import queue
import threading

from .cliques import enumerate_k_cliques
from .linkstream import LinkStream
from .percolate import PercolationState, TemporalCommunity, materialize, process_k_clique

__all__ = ["compute_communities", "percolation_state"]

_DONE = object()


def percolation_state(
    stream: LinkStream, k: int, *, single_thread: bool = False, queue_size: int = 1024
) -> PercolationState:
    """Enumerate k-cliques of the stream and percolate them into one state."""
    if single_thread:
        state = PercolationState(k=k)
        for clique in enumerate_k_cliques(stream, k):
            process_k_clique(state, clique)
        return state

    fifo: queue.Queue = queue.Queue(maxsize=queue_size)
    failure: list[BaseException] = []

    def produce() -> None:
        try:
            for clique in enumerate_k_cliques(stream, k):
                fifo.put(clique)
        except BaseException as exc:  # re-raised on the consumer side
            failure.append(exc)
        finally:
            fifo.put(_DONE)

    worker = threading.Thread(target=produce, name="clique-producer", daemon=True)
    worker.start()
    state = PercolationState(k=k)
    while True:
        item = fifo.get()
        if item is _DONE:
            break
        process_k_clique(state, item)
    worker.join()
    if failure:
        raise failure[0]
    return state


def compute_communities(
    stream: LinkStream, k: int, *, single_thread: bool = False, queue_size: int = 1024
) -> list[TemporalCommunity]:
    """End-to-end: links in, materialized temporal communities out."""
    return materialize(percolation_state(stream, k, single_thread=single_thread, queue_size=queue_size))
