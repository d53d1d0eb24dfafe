from typing import Dict, Hashable, List, Mapping, Tuple

from censtab.core.exceptions import ResourceLimitError
from censtab.core.linalg.modules import PresentedModule
from censtab.core.linalg.ring import RingSpec
from censtab.core.linalg.sparse import SparseVector, add_scaled


class PresentationBuilder:
    """Assemble a presented module from generators, identifications and relations.

    Identifications x ~ y are resolved with union-find before any linear
    algebra runs; other relations are kept as sparse columns over the classes.
    """

    def __init__(self, ring: RingSpec, ambient_cap: int = 200_000):
        self.ring = ring
        self.ambient_cap = ambient_cap
        self.labels: List[Hashable] = []
        self._index: Dict[Hashable, int] = {}
        self._parent: List[int] = []
        self._relations: List[SparseVector] = []

    def add_generator(self, label: Hashable) -> int:
        existing = self._index.get(label)
        if existing is not None:
            return existing
        if len(self.labels) >= self.ambient_cap:
            raise ResourceLimitError("ambient basis", len(self.labels) + 1, self.ambient_cap)
        index = len(self.labels)
        self.labels.append(label)
        self._index[label] = index
        self._parent.append(index)
        return index

    def index_of(self, label: Hashable) -> int:
        return self._index[label]

    def find(self, index: int) -> int:
        parent = self._parent
        root = index
        while parent[root] != root:
            root = parent[root]
        while parent[index] != root:
            parent[index], index = root, parent[index]
        return root

    def identify(self, first: int, second: int) -> None:
        a, b = self.find(first), self.find(second)
        if a != b:
            # Smallest index represents its class
            if b < a:
                a, b = b, a
            self._parent[b] = a

    def add_relation(self, column: Mapping[int, int]) -> None:
        self._relations.append(dict(column))

    def add_difference(self, target: Mapping[int, int], source: int) -> None:
        """Relate a generator with a vector: identification when the vector is a single basis element."""
        items = [(i, self.ring.reduce(v)) for i, v in target.items() if self.ring.reduce(v)]
        if len(items) == 1 and items[0][1] == self.ring.reduce(1):
            self.identify(items[0][0], source)
            return
        column = dict(target)
        add_scaled(self.ring, column, {source: 1}, -1)
        self._relations.append(column)

    def build(self) -> Tuple[PresentedModule, List[int]]:
        """Return the module on class representatives and the class position of every generator."""
        roots = [self.find(i) for i in range(len(self.labels))]
        representatives = sorted(set(roots))
        position = {root: k for k, root in enumerate(representatives)}
        classes = [position[root] for root in roots]

        relations = []
        for column in self._relations:
            merged: SparseVector = {}
            for index, value in column.items():
                add_scaled(self.ring, merged, {classes[index]: 1}, value)
            relations.append(merged)

        module = PresentedModule.build(self.ring, [self.labels[r] for r in representatives], relations)
        return module, classes
