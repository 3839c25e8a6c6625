//! A six-opcode output machine and exhaustive shortest-program search over it.
//!
//! Programs are strings of 3-bit opcodes acting on an output buffer that
//! starts empty:
//!
//! | code | op        | effect                                   |
//! |------|-----------|------------------------------------------|
//! | 000  | `Emit0`   | append 0                                 |
//! | 001  | `Emit1`   | append 1                                 |
//! | 010  | `Double`  | append a copy of the whole buffer        |
//! | 011  | `Advice`  | append the advice string                 |
//! | 100  | `Reverse` | reverse the buffer                       |
//! | 101  | `Drop`    | remove the last bit (no-op when empty)   |
//!
//! Codes 110 and 111 are invalid.

use std::collections::HashSet;
use std::fmt;
use std::hash::Hash;

use crate::bits::BitString;
use crate::error::{Error, Result};

use super::{ComplexityEstimate, EstimateKind, Witness};

/// Buffer cap for direct runs.
pub const DIRECT_RUN_CAP: usize = 1 << 20;
/// Hard ceiling on the search depth in bits (10 opcodes).
pub const MAX_SEARCH_BITS: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    Emit0 = 0,
    Emit1 = 1,
    Double = 2,
    Advice = 3,
    Reverse = 4,
    Drop = 5,
}

impl Op {
    pub const ALL: [Op; 6] = [
        Op::Emit0,
        Op::Emit1,
        Op::Double,
        Op::Advice,
        Op::Reverse,
        Op::Drop,
    ];

    pub fn from_code(code: u8) -> Option<Op> {
        Op::ALL.get(code as usize).copied()
    }

    pub fn code(self) -> u8 {
        self as u8
    }

    pub fn mnemonic(self) -> &'static str {
        match self {
            Op::Emit0 => "EMIT0",
            Op::Emit1 => "EMIT1",
            Op::Double => "DOUBLE",
            Op::Advice => "ADVICE",
            Op::Reverse => "REVERSE",
            Op::Drop => "DROP",
        }
    }
}

/// A validated toy-machine program.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ToyProgram {
    ops: Vec<Op>,
}

impl ToyProgram {
    pub fn new(ops: Vec<Op>) -> Self {
        Self { ops }
    }

    pub fn empty() -> Self {
        Self { ops: Vec::new() }
    }

    /// Decodes a program from its bit code.
    pub fn decode(code: &BitString) -> Result<Self> {
        if code.len() % 3 != 0 {
            return Err(Error::InvalidLength(code.len()));
        }
        let ops = (0..code.len() / 3)
            .map(|i| {
                let opcode = code.read_uint(3 * i, 3).expect("in range") as u8;
                Op::from_code(opcode).ok_or(Error::InvalidOpcode { opcode, index: i })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { ops })
    }

    pub fn ops(&self) -> &[Op] {
        &self.ops
    }

    pub fn len_bits(&self) -> usize {
        3 * self.ops.len()
    }

    pub fn code(&self) -> BitString {
        let mut out = BitString::with_capacity(self.len_bits());
        for op in &self.ops {
            out.push_uint(op.code() as u64, 3);
        }
        out
    }

    /// The program that emits `target` bit by bit.
    pub fn literal(target: &BitString) -> Self {
        Self {
            ops: target
                .iter()
                .map(|b| if b { Op::Emit1 } else { Op::Emit0 })
                .collect(),
        }
    }

    pub fn run(&self, advice: &BitString, cap: usize) -> Result<BitString> {
        let mut buf = BitString::new();
        for &op in &self.ops {
            buf = buf.step(op, advice, cap).ok_or(Error::BufferOverflow { cap })?;
        }
        Ok(buf)
    }

    pub fn mnemonics(&self) -> String {
        self.ops
            .iter()
            .map(|op| op.mnemonic())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Debug for ToyProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ToyProgram({} = {})", self.code(), self.mnemonics())
    }
}

impl fmt::Display for ToyProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

/// Executes raw program bits against `advice` with the direct-run cap.
pub fn toy_run(code: &BitString, advice: &BitString) -> Result<BitString> {
    ToyProgram::decode(code)?.run(advice, DIRECT_RUN_CAP)
}

/// Default search depth: `min(3 * (|target| + 2), 30)`.
pub fn default_max_bits(target_len: usize) -> usize {
    (3 * (target_len + 2)).min(MAX_SEARCH_BITS)
}

/// Exhaustive shortest-program search on a single thread.
pub fn toy_shortest(
    target: &BitString,
    advice: &BitString,
    max_bits: Option<usize>,
) -> ComplexityEstimate {
    toy_shortest_with_workers(target, advice, max_bits, 1)
}

/// Exhaustive shortest-program search with the expansion of every search
/// level split across `workers` threads.
///
/// Programs are visited by length, then lexicographically by code. Buffers
/// already reached by an earlier program are not expanded again: any
/// program through a revisited buffer is matched by an earlier one of equal
/// or shorter length. The returned witness is therefore the
/// lexicographically smallest among the shortest programs, independent of
/// `workers`.
pub fn toy_shortest_with_workers(
    target: &BitString,
    advice: &BitString,
    max_bits: Option<usize>,
    workers: usize,
) -> ComplexityEstimate {
    let max_bits = max_bits.unwrap_or_else(|| default_max_bits(target.len()));
    let max_ops = max_bits / 3;
    let cap = 4 * target.len();

    let found = if cap <= 128 && advice.len() <= 128 {
        search::<Packed>(
            Packed::from_bits(target),
            Packed::from_bits(advice),
            advice.len(),
            target.len(),
            cap,
            max_ops,
            workers,
        )
    } else {
        search::<BitString>(
            target.clone(),
            advice.clone(),
            advice.len(),
            target.len(),
            cap,
            max_ops,
            workers,
        )
    };

    match found {
        Some(program) => ComplexityEstimate {
            value_bits: program.len_bits() as f64,
            kind: EstimateKind::Exact,
            witness: Some(Witness::Program(program)),
            backend: "toy".into(),
        },
        None => ComplexityEstimate {
            value_bits: (3 * target.len()) as f64,
            kind: EstimateKind::UpperBound,
            witness: Some(Witness::Program(ToyProgram::literal(target))),
            backend: "toy".into(),
        },
    }
}

/// Machine buffer as seen by the search.
trait Tape: Clone + Eq + Hash + Send + Sync {
    fn empty() -> Self;
    fn len(&self) -> usize;
    fn step(&self, op: Op, advice: &Self, cap: usize) -> Option<Self>;
}

impl Tape for BitString {
    fn empty() -> Self {
        BitString::new()
    }

    fn len(&self) -> usize {
        BitString::len(self)
    }

    fn step(&self, op: Op, advice: &Self, cap: usize) -> Option<Self> {
        let mut out = self.clone();
        match op {
            Op::Emit0 => out.push(false),
            Op::Emit1 => out.push(true),
            Op::Double => out.extend_from(self),
            Op::Advice => out.extend_from(advice),
            Op::Reverse => out.reverse_in_place(),
            Op::Drop => {
                out.pop();
            }
        }
        (out.len() <= cap).then_some(out)
    }
}

/// Buffers of at most 128 bits; bit `i` of the string is bit `i` of `bits`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Packed {
    bits: u128,
    len: u8,
}

impl Packed {
    fn from_bits(s: &BitString) -> Self {
        debug_assert!(s.len() <= 128);
        let bits = s
            .iter()
            .enumerate()
            .fold(0u128, |acc, (i, b)| acc | ((b as u128) << i));
        Self {
            bits,
            len: s.len() as u8,
        }
    }

    fn append(self, bits: u128, len: usize, cap: usize) -> Option<Self> {
        let total = self.len as usize + len;
        if total > cap {
            return None;
        }
        if len == 0 {
            return Some(self);
        }
        Some(Self {
            bits: self.bits | (bits << self.len),
            len: total as u8,
        })
    }
}

impl Tape for Packed {
    fn empty() -> Self {
        Self { bits: 0, len: 0 }
    }

    fn len(&self) -> usize {
        self.len as usize
    }

    fn step(&self, op: Op, advice: &Self, cap: usize) -> Option<Self> {
        match op {
            Op::Emit0 => self.append(0, 1, cap),
            Op::Emit1 => self.append(1, 1, cap),
            Op::Double => self.append(self.bits, self.len as usize, cap),
            Op::Advice => self.append(advice.bits, advice.len as usize, cap),
            Op::Reverse if self.len == 0 => Some(*self),
            Op::Reverse => Some(Self {
                bits: self.bits.reverse_bits() >> (128 - self.len as u32),
                len: self.len,
            }),
            Op::Drop if self.len == 0 => Some(*self),
            Op::Drop => Some(Self {
                bits: self.bits & !(1u128 << (self.len - 1)),
                len: self.len - 1,
            }),
        }
    }
}

/// Largest buffer length reachable from `len` in `remaining` steps.
///
/// Appends before doublings is optimal, so it suffices to try every split.
fn max_reachable(len: usize, remaining: usize, advice_len: usize) -> usize {
    let grow = advice_len.max(1);
    (0..=remaining)
        .map(|appends| (len + appends * grow).saturating_mul(1usize << (remaining - appends)))
        .max()
        .unwrap_or(len)
}

fn can_reach(len: usize, remaining: usize, target_len: usize, advice_len: usize) -> bool {
    len.saturating_sub(remaining) <= target_len
        && max_reachable(len, remaining, advice_len) >= target_len
}

fn search<T: Tape>(
    target: T,
    advice: T,
    advice_len: usize,
    target_len: usize,
    cap: usize,
    max_ops: usize,
    workers: usize,
) -> Option<ToyProgram> {
    // Program arena: (parent, op) per node; node 0 is the empty program.
    let mut arena: Vec<(u32, Op)> = vec![(0, Op::Emit0)];
    let rebuild = |arena: &[(u32, Op)], mut node: u32, extra: Op| {
        let mut ops = vec![extra];
        while node != 0 {
            let (parent, op) = arena[node as usize];
            ops.push(op);
            node = parent;
        }
        ops.reverse();
        ToyProgram::new(ops)
    };

    let root = T::empty();
    if root == target {
        return Some(ToyProgram::empty());
    }
    if !can_reach(0, max_ops, target_len, advice_len) {
        return None;
    }

    let mut visited: HashSet<T> = HashSet::new();
    visited.insert(root.clone());
    let mut frontier: Vec<(T, u32)> = vec![(root, 0)];

    for depth in 0..max_ops {
        let remaining = max_ops - depth - 1;
        let expand = |chunk: &[(T, u32)]| -> Vec<(T, u32, Op)> {
            let mut out = Vec::with_capacity(chunk.len() * 4);
            for (state, node) in chunk {
                for op in Op::ALL {
                    if let Some(child) = state.step(op, &advice, cap) {
                        if child == target
                            || (remaining > 0
                                && can_reach(child.len(), remaining, target_len, advice_len))
                        {
                            out.push((child, *node, op));
                        }
                    }
                }
            }
            out
        };

        let batches: Vec<Vec<(T, u32, Op)>> = if workers <= 1 || frontier.len() < 1024 {
            vec![expand(&frontier)]
        } else {
            let chunk = frontier.len().div_ceil(workers);
            std::thread::scope(|scope| {
                let handles: Vec<_> = frontier
                    .chunks(chunk)
                    .map(|c| scope.spawn(move || expand(c)))
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("search worker panicked"))
                    .collect()
            })
        };

        let mut next = Vec::new();
        for (child, parent, op) in batches.into_iter().flatten() {
            if child == target {
                return Some(rebuild(&arena, parent, op));
            }
            if visited.insert(child.clone()) {
                arena.push((parent, op));
                next.push((child, (arena.len() - 1) as u32));
            }
        }
        if next.is_empty() {
            return None;
        }
        frontier = next;
    }
    None
}
