//! Permutation groups acting on the alphabet: construction from a small
//! spec DSL, orbits, stabilizers, canonical representatives, and substring
//! weights.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::word::Word;

/// Largest alphabet the letter display convention supports.
pub const MAX_ALPHABET: usize = 26;

/// Default cap on materialized group order (10!).
pub const DEFAULT_ORDER_CAP: u64 = 3_628_800;

/// A permutation of `{0, ..., q-1}`, stored as its image table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    image: Vec<u8>,
}

impl Perm {
    pub fn identity(q: usize) -> Self {
        Perm {
            image: (0..q as u8).collect(),
        }
    }

    /// Build from an image table, validating bijectivity.
    pub fn from_image(image: Vec<u8>) -> Result<Self> {
        let q = image.len();
        let mut seen = vec![false; q];
        for &x in &image {
            if x as usize >= q || seen[x as usize] {
                return Err(Error::InvalidInput(format!(
                    "not a permutation of 0..{q}: {image:?}"
                )));
            }
            seen[x as usize] = true;
        }
        Ok(Perm { image })
    }

    /// Build from disjoint cycles over `0..q`.
    pub fn from_cycles(q: usize, cycles: &[Vec<u8>]) -> Result<Self> {
        let mut image: Vec<u8> = (0..q as u8).collect();
        let mut moved = vec![false; q];
        for cycle in cycles {
            for window in 0..cycle.len() {
                let from = cycle[window];
                let to = cycle[(window + 1) % cycle.len()];
                if from as usize >= q || to as usize >= q {
                    return Err(Error::InvalidInput(format!(
                        "cycle letter out of range for q = {q}"
                    )));
                }
                if moved[from as usize] {
                    return Err(Error::InvalidInput("cycles are not disjoint".into()));
                }
                moved[from as usize] = true;
                image[from as usize] = to;
            }
        }
        Perm::from_image(image)
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, letter: u8) -> u8 {
        self.image[letter as usize]
    }

    /// `self` after `other`: `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm {
            image: other.image.iter().map(|&x| self.image[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut image = vec![0u8; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            image[y as usize] = x as u8;
        }
        Perm { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i as u8 == x)
    }

    /// Letterwise image of a word.
    pub fn act(&self, w: &Word) -> Word {
        Word::new(w.letters().iter().map(|&l| self.apply(l)).collect())
    }
}

/// Description of a permutation group on `q` letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Symmetric(usize),
    Cyclic(usize),
    Trivial(usize),
    /// Blockwise product over consecutive letter blocks.
    Product(Vec<GroupSpec>),
    /// Closure of explicit generators given in cycle notation.
    Generators { q: usize, cycles: Vec<Vec<Vec<u8>>> },
}

impl GroupSpec {
    pub fn alphabet_size(&self) -> usize {
        match self {
            GroupSpec::Symmetric(q) | GroupSpec::Cyclic(q) | GroupSpec::Trivial(q) => *q,
            GroupSpec::Product(parts) => parts.iter().map(|p| p.alphabet_size()).sum(),
            GroupSpec::Generators { q, .. } => *q,
        }
    }

    /// Parse the group-spec DSL:
    /// `S:<q>` | `Z:<q>` | `T:<q>` | `P:<spec>x<spec>...` |
    /// `G:<q>:(cycles)` with 0-based disjoint cycles, e.g. `G:5:(0 1)(2 3)`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidInput(format!("bad group spec {s:?}"));
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        let spec = match kind {
            "S" => GroupSpec::Symmetric(rest.parse().map_err(|_| bad())?),
            "Z" => GroupSpec::Cyclic(rest.parse().map_err(|_| bad())?),
            "T" => GroupSpec::Trivial(rest.parse().map_err(|_| bad())?),
            "P" => {
                let parts: Vec<GroupSpec> = rest
                    .split('x')
                    .map(GroupSpec::parse)
                    .collect::<Result<_>>()?;
                if parts.is_empty() {
                    return Err(bad());
                }
                GroupSpec::Product(parts)
            }
            "G" => {
                let (q_str, cycles_str) = rest.split_once(':').ok_or_else(bad)?;
                let q: usize = q_str.parse().map_err(|_| bad())?;
                GroupSpec::Generators {
                    q,
                    cycles: parse_cycle_lists(cycles_str)?,
                }
            }
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        let q = self.alphabet_size();
        if q == 0 || q > MAX_ALPHABET {
            return Err(Error::InvalidInput(format!(
                "alphabet size {q} outside 1..={MAX_ALPHABET}"
            )));
        }
        match self {
            GroupSpec::Product(parts) => {
                for part in parts {
                    part.validate()?;
                }
            }
            GroupSpec::Generators { q, cycles } => {
                for perm in cycles {
                    Perm::from_cycles(*q, perm)?;
                }
            }
            _ => {}
        }
        Ok(())
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Symmetric(q) => write!(f, "S:{q}"),
            GroupSpec::Cyclic(q) => write!(f, "Z:{q}"),
            GroupSpec::Trivial(q) => write!(f, "T:{q}"),
            GroupSpec::Product(parts) => {
                write!(f, "P:")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "x")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            GroupSpec::Generators { q, cycles } => {
                write!(f, "G:{q}:")?;
                for (pi, perm) in cycles.iter().enumerate() {
                    if pi > 0 {
                        write!(f, "; ")?;
                    }
                    for cycle in perm {
                        write!(f, "(")?;
                        for (i, l) in cycle.iter().enumerate() {
                            if i > 0 {
                                write!(f, " ")?;
                            }
                            write!(f, "{l}")?;
                        }
                        write!(f, ")")?;
                    }
                }
                Ok(())
            }
        }
    }
}

/// Parse whitespace-separated permutations, each a run of `(a b c)` cycles.
fn parse_cycle_lists(s: &str) -> Result<Vec<Vec<Vec<u8>>>> {
    let bad = || Error::InvalidInput(format!("bad cycle notation {s:?}"));
    let mut perms: Vec<Vec<Vec<u8>>> = Vec::new();
    let mut current: Vec<Vec<u8>> = Vec::new();
    let mut rest = s.trim();
    if rest.is_empty() {
        return Err(bad());
    }
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(bad());
        }
        let close = rest.find(')').ok_or_else(bad)?;
        let cycle: Vec<u8> = rest[1..close]
            .split_whitespace()
            .map(|t| t.parse::<u8>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        if cycle.is_empty() {
            return Err(bad());
        }
        current.push(cycle);
        rest = rest[close + 1..].trim_start_matches(' ');
        // A ';' separates distinct generator permutations; adjacent cycles
        // belong to one permutation.
        if let Some(after) = rest.strip_prefix(';') {
            perms.push(std::mem::take(&mut current));
            rest = after.trim_start();
        }
    }
    if !current.is_empty() {
        perms.push(current);
    }
    Ok(perms)
}

/// A finite permutation group materialized as an explicit element set.
///
/// Immutable after construction; every query is pure.
#[derive(Debug, Clone)]
pub struct PermutationGroup {
    q: usize,
    spec: GroupSpec,
    elements: Vec<Perm>,
    generators: Vec<Perm>,
}

impl PartialEq for PermutationGroup {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q && self.elements == other.elements
    }
}
impl Eq for PermutationGroup {}

impl PermutationGroup {
    /// Materialize the group described by `spec`, with the default order cap.
    pub fn build(spec: &GroupSpec) -> Result<Self> {
        Self::build_with_cap(spec, DEFAULT_ORDER_CAP)
    }

    pub fn build_with_cap(spec: &GroupSpec, cap: u64) -> Result<Self> {
        spec.validate()?;
        let q = spec.alphabet_size();
        let generators = Self::spec_generators(spec)?;
        let mut elements = materialize(spec, cap)?;
        elements.sort_unstable();
        elements.dedup();
        Ok(PermutationGroup {
            q,
            spec: spec.clone(),
            elements,
            generators,
        })
    }

    /// Convenience: parse the DSL and build.
    pub fn from_dsl(s: &str) -> Result<Self> {
        Self::build(&GroupSpec::parse(s)?)
    }

    fn spec_generators(spec: &GroupSpec) -> Result<Vec<Perm>> {
        let q = spec.alphabet_size();
        Ok(match spec {
            GroupSpec::Trivial(_) => vec![],
            GroupSpec::Symmetric(n) => {
                let mut gens = Vec::new();
                if *n >= 2 {
                    gens.push(Perm::from_cycles(q, &[vec![0, 1]])?);
                }
                if *n >= 3 {
                    gens.push(Perm::from_cycles(q, &[(0..*n as u8).collect()])?);
                }
                gens
            }
            GroupSpec::Cyclic(n) => {
                if *n >= 2 {
                    vec![Perm::from_cycles(q, &[(0..*n as u8).collect()])?]
                } else {
                    vec![]
                }
            }
            GroupSpec::Product(parts) => {
                let mut gens = Vec::new();
                let mut offset = 0u8;
                for part in parts {
                    let part_q = part.alphabet_size();
                    for g in Self::spec_generators(part)? {
                        // Embed the block generator into the full alphabet.
                        let mut image: Vec<u8> = (0..q as u8).collect();
                        for (i, item) in image.iter_mut().enumerate().skip(offset as usize) {
                            if i < offset as usize + part_q {
                                *item = offset + g.apply((i as u8) - offset);
                            }
                        }
                        gens.push(Perm::from_image(image)?);
                    }
                    offset += part_q as u8;
                }
                gens
            }
            GroupSpec::Generators { q, cycles } => cycles
                .iter()
                .map(|c| Perm::from_cycles(*q, c))
                .collect::<Result<_>>()?,
        })
    }

    pub fn alphabet_size(&self) -> usize {
        self.q
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    /// Canonical DSL string of the spec; used as the group identity key.
    pub fn spec_string(&self) -> String {
        self.spec.to_string()
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn is_cyclic_spec(&self) -> bool {
        matches!(self.spec, GroupSpec::Cyclic(_))
    }

    /// Orbit of `w`, breadth-first over generator application, sorted.
    pub fn orbit(&self, w: &Word) -> Vec<Word> {
        let mut seen: BTreeSet<Word> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back(w.clone());
        while let Some(current) = queue.pop_front() {
            for g in &self.generators {
                let image = g.act(&current);
                if seen.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Lexicographically least member of the orbit of `w`.
    pub fn canonical_representative(&self, w: &Word) -> Word {
        self.orbit(w).into_iter().next().expect("orbit nonempty")
    }

    /// Number of group elements fixing `w` letterwise.
    pub fn stabilizer_order(&self, w: &Word) -> u64 {
        self.elements
            .iter()
            .filter(|g| w.letters().iter().all(|&l| g.apply(l) == l))
            .count() as u64
    }

    /// Are `x` and `y` in the same orbit?
    pub fn equivalent(&self, x: &Word, y: &Word) -> bool {
        x.len() == y.len() && self.elements.iter().any(|g| &g.act(x) == y)
    }

    /// Weight of the substring `w[start..end)` in `w`: the number of orbit
    /// members agreeing with `w` on those positions. Equals
    /// `|G_x| / |G_w|` for the substring `x`.
    pub fn substring_weight(&self, w: &Word, start: usize, end: usize) -> u64 {
        assert!(start < end && end <= w.len(), "substring must be nonempty");
        let sub = w.slice(start, end);
        let weight = self.stabilizer_order(&sub) / self.stabilizer_order(w);
        debug_assert_eq!(
            weight,
            self.orbit(w)
                .iter()
                .filter(|v| v.letters()[start..end] == *sub.letters())
                .count() as u64
        );
        weight
    }

    /// Partition of the alphabet into single-letter orbits, sorted blocks.
    pub fn letter_orbits(&self) -> Vec<Vec<u8>> {
        let mut assigned = vec![false; self.q];
        let mut blocks = Vec::new();
        for l in 0..self.q as u8 {
            if assigned[l as usize] {
                continue;
            }
            let orbit = self.orbit(&Word::new(vec![l]));
            let mut block: Vec<u8> = orbit.iter().map(|w| w.letters()[0]).collect();
            block.sort_unstable();
            for &m in &block {
                assigned[m as usize] = true;
            }
            blocks.push(block);
        }
        blocks
    }

    /// True when some pair of letters lies in different orbits.
    pub fn has_two_letter_orbits(&self) -> bool {
        self.letter_orbits().len() >= 2
    }
}

fn close_under_composition(q: usize, generators: &[Perm], cap: u64) -> Result<Vec<Perm>> {
    let mut elements: BTreeSet<Perm> = BTreeSet::new();
    let identity = Perm::identity(q);
    elements.insert(identity.clone());
    let mut queue: VecDeque<Perm> = VecDeque::new();
    queue.push_back(identity);
    while let Some(current) = queue.pop_front() {
        for g in generators {
            let next = g.compose(&current);
            if elements.contains(&next) {
                continue;
            }
            if elements.len() as u64 >= cap {
                return Err(Error::OrderCapExceeded {
                    cap,
                    reached: elements.len() as u64 + 1,
                });
            }
            elements.insert(next.clone());
            queue.push_back(next);
        }
    }
    Ok(elements.into_iter().collect())
}
