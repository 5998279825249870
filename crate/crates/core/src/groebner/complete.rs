use std::collections::BTreeSet;

use super::overlap::{all_overlaps, overlaps_of, s_polynomial, OverlapSeed};
use super::reduce::{normal_form, reduce_tail};
use super::{GroebnerError, GroebnerResult, Presentation, Status};
use crate::freealg::{MonomialOrder, NcPolynomial};

/// Queue entry; the derived ordering is the processing order: ambiguity
/// length, then the ambiguity word under the monomial order, then the
/// insertion ids of the two basis elements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Pending {
    key: (usize, Vec<usize>),
    i: usize,
    j: usize,
    seed: OverlapSeed,
}

/// Interreduced basis under construction. `ids` are insertion stamps used by
/// the overlap queue to detect elements that have since been removed.
struct Completion {
    order: MonomialOrder,
    bound: usize,
    basis: Vec<NcPolynomial>,
    ids: Vec<usize>,
    next_id: usize,
    queue: BTreeSet<Pending>,
}

impl Completion {
    fn new(order: MonomialOrder, bound: usize) -> Self {
        Completion {
            order,
            bound,
            basis: Vec::new(),
            ids: Vec::new(),
            next_id: 0,
            queue: BTreeSet::new(),
        }
    }

    fn position(&self, id: usize) -> Option<usize> {
        self.ids.iter().position(|&x| x == id)
    }

    /// Reduces `f` and merges the result into the basis, keeping it monic and
    /// interreduced. Elements whose leading word becomes divisible are pulled
    /// out and re-added.
    fn add(&mut self, f: NcPolynomial) {
        let mut pending = vec![f];
        while let Some(f) = pending.pop() {
            let h = normal_form(&f, &self.basis);
            if h.is_zero() {
                continue;
            }
            let h = h.monic();
            let lm = h.lm().expect("nonzero").clone();

            let mut k = 0;
            while k < self.basis.len() {
                if self.basis[k].lm().expect("nonzero").contains(&lm) {
                    pending.push(self.basis.remove(k));
                    self.ids.remove(k);
                } else {
                    k += 1;
                }
            }

            let id = self.next_id;
            self.next_id += 1;
            self.basis.push(h);
            self.ids.push(id);

            for k in 0..self.basis.len() - 1 {
                let touches = self.basis[k].tail().words().any(|w| w.contains(&lm));
                if touches {
                    let others: Vec<NcPolynomial> = self
                        .basis
                        .iter()
                        .enumerate()
                        .filter(|&(m, _)| m != k)
                        .map(|(_, g)| g.clone())
                        .collect();
                    self.basis[k] = reduce_tail(&self.basis[k], &others);
                }
            }
            self.enqueue_for(id);
        }
    }

    fn enqueue_for(&mut self, id: usize) {
        let a = self.position(id).expect("just inserted");
        let u = self.basis[a].lm().expect("nonzero").clone();
        if u.is_one() {
            return;
        }
        for (b, &other) in self.ids.iter().enumerate() {
            let v = self.basis[b].lm().expect("nonzero");
            let mut push = |i: usize, j: usize, first: &crate::freealg::Word, second: &crate::freealg::Word| {
                for seed in overlaps_of(first, second) {
                    let amb = seed.ambiguity(first, second);
                    if amb.degree() <= self.bound {
                        let key = self.order.sort_key(&amb);
                        self.queue.insert(Pending { key, i, j, seed });
                    }
                }
            };
            push(id, other, &u, v);
            if other != id {
                push(other, id, v, &u);
            }
        }
    }

    fn drain_queue(&mut self) {
        while let Some(p) = self.queue.pop_first() {
            let (Some(a), Some(b)) = (self.position(p.i), self.position(p.j)) else {
                continue;
            };
            let s = s_polynomial(&self.basis[a], &self.basis[b], &p.seed);
            self.add(s);
        }
    }

    /// Re-checks every ambiguity within the bound against the current basis.
    /// Returns `false` if some S-polynomial had a nonzero normal form (it has
    /// then been added and the queue must be drained again).
    fn verify(&mut self) -> bool {
        for o in all_overlaps(&self.basis) {
            let u = self.basis[o.i].lm().expect("nonzero");
            let v = self.basis[o.j].lm().expect("nonzero");
            if o.seed.ambiguity(u, v).degree() > self.bound {
                continue;
            }
            let s = s_polynomial(&self.basis[o.i], &self.basis[o.j], &o.seed);
            let r = normal_form(&s, &self.basis);
            if !r.is_zero() {
                self.add(r);
                return false;
            }
        }
        true
    }

    fn finish(mut self) -> GroebnerResult {
        let truncated = all_overlaps(&self.basis).iter().any(|o| {
            let u = self.basis[o.i].lm().expect("nonzero");
            let v = self.basis[o.j].lm().expect("nonzero");
            o.seed.ambiguity(u, v).degree() > self.bound
        });
        let order = self.order.clone();
        self.basis
            .sort_by(|a, b| order.compare(a.lm().expect("nonzero"), b.lm().expect("nonzero")));
        GroebnerResult {
            basis: self.basis,
            degree_bound: self.bound,
            status: if truncated {
                Status::CompleteUpTo(self.bound)
            } else {
                Status::Complete
            },
            order,
        }
    }
}

/// Degree-truncated Buchberger–Mora completion.
///
/// Every ambiguity whose word has length at most `degree_bound` is resolved.
/// The status is [`Status::Complete`] only when no ambiguity of the final
/// basis exceeds the bound, in which case the result is a full reduced
/// Gröbner basis.
pub fn complete(p: &Presentation, degree_bound: usize) -> Result<GroebnerResult, GroebnerError> {
    if let Some(d) = p.max_degree() {
        if d > degree_bound {
            return Err(GroebnerError::DegreeBoundTooSmall {
                relation_degree: d,
                bound: degree_bound,
            });
        }
    }
    let mut run = Completion::new(p.order().clone(), degree_bound);
    let mut relations: Vec<NcPolynomial> = p.relations().to_vec();
    let order = p.order().clone();
    relations.sort_by(|a, b| order.compare(a.lm().expect("nonzero"), b.lm().expect("nonzero")));
    for r in relations {
        run.add(r);
    }
    loop {
        run.drain_queue();
        if run.verify() {
            break;
        }
    }
    Ok(run.finish())
}

/// True iff every S-polynomial of `basis` whose ambiguity word has length at
/// most `degree_bound` reduces to zero. The basis need not be interreduced.
pub fn is_groebner_up_to(basis: &[NcPolynomial], degree_bound: usize) -> bool {
    let basis: Vec<NcPolynomial> = basis.iter().filter(|g| !g.is_zero()).cloned().collect();
    all_overlaps(&basis).into_iter().all(|o| {
        let u = basis[o.i].lm().expect("nonzero");
        let v = basis[o.j].lm().expect("nonzero");
        if o.seed.ambiguity(u, v).degree() > degree_bound {
            return true;
        }
        normal_form(&s_polynomial(&basis[o.i], &basis[o.j], &o.seed), &basis).is_zero()
    })
}
