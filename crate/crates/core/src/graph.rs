//! Immutable tree model, structural vertex classes and canonical forms.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, TreeViolation};
use crate::Result;

/// A subset of the vertices `0..capacity` of some tree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
    capacity: usize,
}

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        VertexSet { words: vec![0; capacity.div_ceil(64)], capacity }
    }

    pub fn full(capacity: usize) -> Self {
        let mut s = Self::new(capacity);
        for v in 0..capacity {
            s.insert(v);
        }
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(capacity: usize, vertices: I) -> Result<Self> {
        let mut s = Self::new(capacity);
        for v in vertices {
            if v >= capacity {
                return Err(Error::IndexOutOfRange { vertex: v, n: capacity });
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Builds a set from the low `capacity` bits of `mask`.
    pub fn from_mask(capacity: usize, mask: u64) -> Self {
        debug_assert!(capacity >= 64 || mask >> capacity == 0);
        let mut s = Self::new(capacity);
        if capacity > 0 {
            s.words[0] = mask;
        }
        s
    }

    /// The set as a bit mask; `None` when the capacity exceeds 64.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    /// Panics if `v >= capacity`.
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.capacity, "vertex {v} out of range for capacity {}", self.capacity);
        let (w, b) = (v / 64, v % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.capacity {
            return false;
        }
        let (w, b) = (v / 64, v % 64);
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        present
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.capacity && self.words[v / 64] & (1 << (v % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut bits = w;
            core::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i * 64 + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    /// The same members viewed as a subset of a larger vertex range.
    pub fn with_capacity(&self, capacity: usize) -> VertexSet {
        assert!(capacity >= self.capacity);
        let mut s = VertexSet::new(capacity);
        for v in self.iter() {
            s.insert(v);
        }
        s
    }
}

impl core::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A connected acyclic graph on the vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tree {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

/// A simple path in a tree, listed from one end to the other.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Path {
    vertices: Vec<usize>,
}

impl Path {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of edges on the path.
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn reversed(&self) -> Path {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Path { vertices }
    }
}

/// Canonical rooted form of a free tree.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    /// Equal for two trees iff they are isomorphic.
    pub code: Vec<u8>,
    /// `order[i]` is the vertex at canonical position `i`. Mapping position
    /// to position between two trees with equal codes is an isomorphism.
    pub order: Vec<usize>,
}

impl Tree {
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Tree> {
        let fail = |v| Err(Error::NotATree(v));
        if n == 0 {
            return fail(TreeViolation::Empty);
        }
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return fail(TreeViolation::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return fail(TreeViolation::SelfLoop { vertex: u });
            }
        }
        let mut normalized: Vec<(usize, usize)> =
            edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return fail(TreeViolation::DuplicateEdge { u: w[0].0, v: w[0].1 });
        }
        // Union-find over the edges in input order so the reported cycle edge
        // is the first one that closes a cycle.
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(u, v) in edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return fail(TreeViolation::Cycle { u: u.min(v), v: u.max(v) });
            }
            parent[ru] = rv;
        }
        // acyclic with fewer than n - 1 edges
        if normalized.len() != n - 1 {
            return fail(TreeViolation::Disconnected);
        }
        Ok(Self::from_normalized(n, normalized))
    }

    /// `edges` must already be a valid tree edge list with `u < v`, sorted.
    fn from_normalized(n: usize, edges: Vec<(usize, usize)>) -> Tree {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Tree { adjacency, edges }
    }

    /// Builds a tree from edges already known to form a tree.
    pub(crate) fn from_edges_unchecked(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Tree {
        let mut normalized: Vec<(usize, usize)> =
            edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        normalized.sort_unstable();
        debug_assert_eq!(normalized.len() + 1, n);
        Self::from_normalized(n, normalized)
    }

    pub fn path(n: usize) -> Tree {
        assert!(n >= 1);
        Self::from_edges_unchecked(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn star(n: usize) -> Tree {
        assert!(n >= 2);
        Self::from_edges_unchecked(n, (1..n).map(|i| (0, i)))
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    pub fn is_star(&self) -> bool {
        let n = self.order();
        n >= 2 && (0..n).any(|v| self.degree(v) == n - 1)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { vertex: v, n: self.order() })
        }
    }

    /// End vertices (degree one). Empty for the single-vertex tree.
    pub fn leaves(&self) -> VertexSet {
        self.collect(|v| self.is_leaf(v))
    }

    fn leaf_neighbors(&self, v: usize) -> usize {
        self.neighbors(v).iter().filter(|&&w| self.is_leaf(w)).count()
    }

    pub fn supports(&self) -> VertexSet {
        self.collect(|v| self.leaf_neighbors(v) >= 1)
    }

    pub fn strong_supports(&self) -> VertexSet {
        self.collect(|v| self.leaf_neighbors(v) >= 2)
    }

    /// Vertices at distance exactly two from some leaf.
    pub fn two_supports(&self) -> VertexSet {
        let mut s = VertexSet::new(self.order());
        for x in self.leaves().iter() {
            for &y in self.neighbors(x) {
                for &z in self.neighbors(y) {
                    if z != x {
                        s.insert(z);
                    }
                }
            }
        }
        s
    }

    fn collect(&self, pred: impl Fn(usize) -> bool) -> VertexSet {
        let mut s = VertexSet::new(self.order());
        for v in (0..self.order()).filter(|&v| pred(v)) {
            s.insert(v);
        }
        s
    }

    /// `pn(u, S)`: the vertices whose only neighbor in `set` is `u`.
    pub fn private_neighbors(&self, u: usize, set: &VertexSet) -> Result<VertexSet> {
        self.check_vertex(u)?;
        if !set.contains(u) {
            return Err(Error::NotInSet { vertex: u });
        }
        let mut out = VertexSet::new(self.order());
        for w in 0..self.order() {
            let mut inside = self.neighbors(w).iter().filter(|&&x| set.contains(x));
            if inside.next() == Some(&u) && inside.next().is_none() {
                out.insert(w);
            }
        }
        Ok(out)
    }

    /// BFS distances and parents from `source`; neighbors are visited in
    /// ascending order.
    pub fn bfs(&self, source: usize) -> (Vec<usize>, Vec<usize>) {
        let n = self.order();
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::from([source]);
        dist[source] = 0;
        while let Some(v) = queue.pop_front() {
            for &w in self.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        (dist, parent)
    }

    fn farthest(dist: &[usize]) -> usize {
        // first index of the maximum, i.e. ties go to the lower vertex
        let max = *dist.iter().max().unwrap();
        dist.iter().position(|&d| d == max).unwrap()
    }

    /// A diameter path from a double BFS started at vertex 0, ties broken
    /// toward lower indices.
    pub fn longest_path(&self) -> Path {
        let (d0, _) = self.bfs(0);
        let a = Self::farthest(&d0);
        let (da, parent) = self.bfs(a);
        let b = Self::farthest(&da);
        let mut vertices = vec![b];
        let mut cur = b;
        while cur != a {
            cur = parent[cur];
            vertices.push(cur);
        }
        vertices.reverse();
        Path { vertices }
    }

    /// The one or two central vertices.
    pub fn centers(&self) -> Vec<usize> {
        let p = self.longest_path();
        let len = p.length();
        let vs = p.vertices();
        if len.is_multiple_of(2) {
            vec![vs[len / 2]]
        } else {
            let mut c = vec![vs[len / 2], vs[len / 2 + 1]];
            c.sort_unstable();
            c
        }
    }

    /// Parenthesis code of the tree rooted at `root` with children sorted by
    /// code, plus the matching preorder.
    pub fn rooted_form(&self, root: usize) -> CanonicalForm {
        let n = self.order();
        let (_, parent) = self.bfs(root);
        let mut by_depth: Vec<usize> = Vec::with_capacity(n);
        let mut queue = VecDeque::from([root]);
        let mut seen = vec![false; n];
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            by_depth.push(v);
            for &w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        let mut codes: Vec<Vec<u8>> = vec![Vec::new(); n];
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &v in by_depth.iter().rev() {
            let mut kids: Vec<usize> =
                self.neighbors(v).iter().copied().filter(|&w| w != parent[v]).collect();
            kids.sort_by(|&a, &b| codes[a].cmp(&codes[b]));
            let mut code = vec![b'('];
            for &k in &kids {
                code.extend_from_slice(&codes[k]);
            }
            code.push(b')');
            for &k in &kids {
                codes[k] = Vec::new();
            }
            codes[v] = code;
            children[v] = kids;
        }
        let mut order = Vec::with_capacity(n);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            order.push(v);
            stack.extend(children[v].iter().rev());
        }
        CanonicalForm { code: core::mem::take(&mut codes[root]), order }
    }

    /// Canonical form rooted at the center (the smaller code of the two
    /// centers for bicentral trees).
    pub fn canonical_form(&self) -> CanonicalForm {
        self.centers()
            .into_iter()
            .map(|c| self.rooted_form(c))
            .min_by(|a, b| a.code.cmp(&b.code))
            .unwrap()
    }

    pub fn canonical_code(&self) -> Vec<u8> {
        self.canonical_form().code
    }

    pub fn is_isomorphic(&self, other: &Tree) -> bool {
        self.order() == other.order() && self.canonical_code() == other.canonical_code()
    }

    /// An isomorphism `self -> other` as a vertex map, if one exists.
    pub fn isomorphism_to(&self, other: &Tree) -> Option<Vec<usize>> {
        if self.order() != other.order() {
            return None;
        }
        let a = self.canonical_form();
        let b = other.canonical_form();
        if a.code != b.code {
            return None;
        }
        let mut map = vec![0; self.order()];
        for (i, &v) in a.order.iter().enumerate() {
            map[v] = b.order[i];
        }
        Some(map)
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Tree {
        assert_eq!(perm.len(), self.order());
        Self::from_edges_unchecked(self.order(), self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Deletes `removed` and compacts the remaining indices, keeping their
    /// relative order. Returns the new tree and the old-to-new index map.
    pub fn without_vertices(&self, removed: &[usize]) -> Result<(Tree, Vec<Option<usize>>)> {
        let n = self.order();
        let mut map = vec![Some(0); n];
        for &r in removed {
            self.check_vertex(r)?;
            map[r] = None;
        }
        let mut next = 0;
        for slot in map.iter_mut().filter(|s| s.is_some()) {
            *slot = Some(next);
            next += 1;
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((map[u]?, map[v]?)))
            .collect();
        let tree = Tree::from_edge_list(next, &edges)?;
        Ok((tree, map))
    }

    /// Adds new vertices `n, n+1, ...` (count `added`) with the given extra edges.
    pub(crate) fn grown(&self, added: usize, extra: &[(usize, usize)]) -> Tree {
        Self::from_edges_unchecked(
            self.order() + added,
            self.edges.iter().copied().chain(extra.iter().copied()),
        )
    }
}
