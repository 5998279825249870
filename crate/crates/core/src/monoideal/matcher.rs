use std::collections::VecDeque;

use crate::freealg::{Letter, Word};

/// Aho–Corasick automaton over generator indices. A state is *dead* when
/// the letters read so far end with some pattern.
#[derive(Debug, Clone)]
pub struct SubwordMatcher {
    alphabet: usize,
    goto: Vec<usize>,
    dead: Vec<bool>,
}

pub const START: usize = 0;

impl SubwordMatcher {
    pub fn new(alphabet: usize, patterns: &[Word]) -> Self {
        let mut trie: Vec<Vec<Option<usize>>> = vec![vec![None; alphabet]];
        let mut terminal = vec![false];
        for p in patterns {
            let mut s = START;
            for &x in p.letters() {
                let x = x as usize;
                s = match trie[s][x] {
                    Some(t) => t,
                    None => {
                        trie.push(vec![None; alphabet]);
                        terminal.push(false);
                        let t = trie.len() - 1;
                        trie[s][x] = Some(t);
                        t
                    }
                };
            }
            terminal[s] = true;
        }

        let states = trie.len();
        let mut goto = vec![START; states * alphabet];
        let mut fail = vec![START; states];
        let mut dead = terminal;
        let mut queue = VecDeque::new();
        for x in 0..alphabet {
            match trie[START][x] {
                Some(t) => {
                    goto[x] = t;
                    queue.push_back(t);
                }
                None => goto[x] = START,
            }
        }
        while let Some(s) = queue.pop_front() {
            dead[s] = dead[s] || dead[fail[s]];
            for x in 0..alphabet {
                match trie[s][x] {
                    Some(t) => {
                        fail[t] = goto[fail[s] * alphabet + x];
                        goto[s * alphabet + x] = t;
                        queue.push_back(t);
                    }
                    None => goto[s * alphabet + x] = goto[fail[s] * alphabet + x],
                }
            }
        }
        SubwordMatcher { alphabet, goto, dead }
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.dead.len()
    }

    pub fn step(&self, state: usize, x: Letter) -> usize {
        self.goto[state * self.alphabet + x as usize]
    }

    pub fn is_dead(&self, state: usize) -> bool {
        self.dead[state]
    }

    /// True iff some pattern occurs in `w`.
    pub fn matches(&self, w: &Word) -> bool {
        let mut s = START;
        if self.dead[s] {
            return true;
        }
        for &x in w.letters() {
            s = self.step(s, x);
            if self.dead[s] {
                return true;
            }
        }
        false
    }

    /// Live successors of a live state, one per letter that keeps it live.
    pub fn live_successors(&self, state: usize) -> impl Iterator<Item = (Letter, usize)> + '_ {
        (0..self.alphabet as Letter).filter_map(move |x| {
            let t = self.step(state, x);
            (!self.dead[t]).then_some((x, t))
        })
    }

    /// Whether the live part of the automaton reachable from the start state
    /// contains a cycle, i.e. whether arbitrarily long pattern-free words exist.
    pub fn has_live_cycle(&self) -> bool {
        if self.dead[START] {
            return false;
        }
        // 0 = unvisited, 1 = on stack, 2 = finished
        let mut color = vec![0u8; self.num_states()];
        let mut stack: Vec<(usize, Letter)> = vec![(START, 0)];
        color[START] = 1;
        while let Some(top) = stack.last_mut() {
            let (s, x) = *top;
            if x as usize == self.alphabet {
                color[s] = 2;
                stack.pop();
                continue;
            }
            top.1 += 1;
            let t = self.step(s, x);
            if self.dead[t] {
                continue;
            }
            match color[t] {
                0 => {
                    color[t] = 1;
                    stack.push((t, 0));
                }
                1 => return true,
                _ => {}
            }
        }
        false
    }
}
