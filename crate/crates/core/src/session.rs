//! Group selection and the name-registered poset and complex builders that
//! the command line dispatches to.

use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor_posets::{enumerate_circular, enumerate_linear};
use crate::labels::{labelers, Labeler};
use crate::marked_group::{Integers, Limits, MarkedGroup, Permutation, SymmetricGroup};
use crate::poset::GradedPoset;
use crate::registry::Registry;
use crate::top_poset::stratum_complex;
use crate::weighted_complexes::{build_interval_complex, build_order_complex, ComplexSummary};

/// `sym:d` or `int:n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupSpec {
    Sym(usize),
    Int(i64),
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::Usage(format!("group spec `{text}` is not sym:d or int:n"));
        let (family, arg) = text.split_once(':').ok_or_else(bad)?;
        match family {
            "sym" => match arg.parse::<usize>() {
                Ok(d) if d >= 1 => Ok(Self::Sym(d)),
                _ => Err(bad()),
            },
            "int" => match arg.parse::<i64>() {
                Ok(n) if n >= 0 => Ok(Self::Int(n)),
                _ => Err(bad()),
            },
            _ => Err(bad()),
        }
    }
}

/// A marked group together with the element every builder works below.
pub enum Session {
    Sym {
        mg: MarkedGroup<SymmetricGroup>,
        target: Permutation,
        labeler: Arc<dyn Labeler>,
    },
    Int {
        mg: MarkedGroup<Integers>,
        target: i64,
    },
}

impl Session {
    /// The target defaults to `δ` for `sym:d` and to `n` for `int:n`.
    pub fn new(spec: GroupSpec, target: Option<&str>, labels: &str, limits: Limits) -> Result<Self> {
        match spec {
            GroupSpec::Sym(d) => {
                let mg = MarkedGroup::symmetric(d)?.with_limits(limits);
                let target = match target {
                    Some(text) => Permutation::parse(d, text)?,
                    None => mg.delta(),
                };
                Ok(Self::Sym {
                    mg,
                    target,
                    labeler: labelers().get(labels)?,
                })
            }
            GroupSpec::Int(n) => {
                let target = match target {
                    Some(text) => text
                        .trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("`{text}` is not an integer")))?,
                    None => n,
                };
                Ok(Self::Int {
                    mg: MarkedGroup::integers().with_limits(limits),
                    target,
                })
            }
        }
    }

    pub fn group_text(&self) -> String {
        match self {
            Self::Sym { mg, .. } => format!("sym:{}", mg.group().degree()),
            Self::Int { .. } => "int".to_string(),
        }
    }

    pub fn target_text(&self) -> String {
        match self {
            Self::Sym { target, labeler, .. } => labeler.label(target),
            Self::Int { target, .. } => target.to_string(),
        }
    }
}

/// A poset flattened to labels, ranks and covers, ready for export.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Listing {
    pub kind: String,
    pub group: String,
    pub target: String,
    pub elements: Vec<ListedElement>,
    /// `[lower, upper]` index pairs.
    pub covers: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ListedElement {
    pub id: usize,
    pub rank: usize,
    pub text: String,
}

impl Listing {
    pub fn from_poset<T: Clone + Eq + std::hash::Hash>(
        kind: &str,
        session: &Session,
        poset: &GradedPoset<T>,
        label: impl Fn(&T) -> String,
    ) -> Self {
        Self {
            kind: kind.to_string(),
            group: session.group_text(),
            target: session.target_text(),
            elements: poset
                .items()
                .iter()
                .enumerate()
                .map(|(id, x)| ListedElement {
                    id,
                    rank: poset.rank(id),
                    text: label(x),
                })
                .collect(),
            covers: poset.covers().iter().map(|&(lo, hi)| [lo, hi]).collect(),
        }
    }

    pub fn rank_profile(&self) -> Vec<usize> {
        let top = self.elements.iter().map(|e| e.rank + 1).max().unwrap_or(0);
        let mut profile = vec![0; top];
        for e in &self.elements {
            profile[e.rank] += 1;
        }
        profile
    }

    /// `15 elements (5,7,3 by rank 0,1,2)`.
    pub fn counts_text(&self) -> String {
        let profile = self.rank_profile();
        let counts: Vec<String> = profile.iter().map(usize::to_string).collect();
        let ranks: Vec<String> = (0..profile.len()).map(|r| r.to_string()).collect();
        let noun = if self.elements.len() == 1 { "element" } else { "elements" };
        format!(
            "{} {noun} ({} by rank {})",
            self.elements.len(),
            counts.join(","),
            ranks.join(",")
        )
    }

    /// Keeps the elements of one rank and the covers between kept elements.
    pub fn restrict_to_rank(&self, rank: usize) -> Self {
        let kept: Vec<&ListedElement> = self.elements.iter().filter(|e| e.rank == rank).collect();
        Self {
            elements: kept.into_iter().cloned().collect(),
            covers: Vec::new(),
            ..self.clone()
        }
    }
}

pub trait PosetKind: Send + Sync {
    fn name(&self) -> &'static str;
    fn build(&self, session: &Session) -> Result<Listing>;
}

struct FactLinear;
struct FactCircular;
struct CompLinear;
struct CompCircular;
struct Interval;

fn need_int(session: &Session, kind: &str) -> Result<()> {
    match session {
        Session::Int { .. } => Ok(()),
        Session::Sym { .. } => Err(Error::Usage(format!("poset `{kind}` needs an int:n group"))),
    }
}

impl PosetKind for FactLinear {
    fn name(&self) -> &'static str {
        "fact-linear"
    }

    fn build(&self, session: &Session) -> Result<Listing> {
        match session {
            Session::Sym { mg, target, labeler } => {
                let p = enumerate_linear(mg, target)?;
                Ok(Listing::from_poset(self.name(), session, &p, |f| f.text(&|x| labeler.label(x))))
            }
            Session::Int { mg, target } => {
                let p = enumerate_linear(mg, target)?;
                Ok(Listing::from_poset(self.name(), session, &p, |f| f.text(&|x| x.to_string())))
            }
        }
    }
}

impl PosetKind for FactCircular {
    fn name(&self) -> &'static str {
        "fact-circular"
    }

    fn build(&self, session: &Session) -> Result<Listing> {
        match session {
            Session::Sym { mg, target, labeler } => {
                let p = enumerate_circular(mg, target)?;
                let id = mg.identity();
                Ok(Listing::from_poset(self.name(), session, &p, |f| {
                    f.text(&|x| labeler.label(x), &id)
                }))
            }
            Session::Int { mg, target } => {
                let p = enumerate_circular(mg, target)?;
                Ok(Listing::from_poset(self.name(), session, &p, |f| {
                    f.text(&|x| x.to_string(), &0)
                }))
            }
        }
    }
}

impl PosetKind for CompLinear {
    fn name(&self) -> &'static str {
        "comp-linear"
    }

    fn build(&self, session: &Session) -> Result<Listing> {
        need_int(session, self.name())?;
        FactLinear.build(session).map(|l| Listing {
            kind: self.name().to_string(),
            ..l
        })
    }
}

impl PosetKind for CompCircular {
    fn name(&self) -> &'static str {
        "comp-circular"
    }

    fn build(&self, session: &Session) -> Result<Listing> {
        need_int(session, self.name())?;
        FactCircular.build(session).map(|l| Listing {
            kind: self.name().to_string(),
            ..l
        })
    }
}

impl PosetKind for Interval {
    fn name(&self) -> &'static str {
        "interval"
    }

    fn build(&self, session: &Session) -> Result<Listing> {
        match session {
            Session::Sym { mg, target, labeler } => {
                let p = mg.interval(target)?;
                Ok(Listing::from_poset(self.name(), session, &p, |x| labeler.label(x)))
            }
            Session::Int { mg, target } => {
                let p = mg.interval(target)?;
                Ok(Listing::from_poset(self.name(), session, &p, i64::to_string))
            }
        }
    }
}

pub fn poset_kinds() -> Registry<dyn PosetKind> {
    Registry::new("poset kind")
        .with("fact-linear", || Arc::new(FactLinear) as Arc<dyn PosetKind>)
        .with("fact-circular", || Arc::new(FactCircular) as Arc<dyn PosetKind>)
        .with("comp-linear", || Arc::new(CompLinear) as Arc<dyn PosetKind>)
        .with("comp-circular", || Arc::new(CompCircular) as Arc<dyn PosetKind>)
        .with("interval", || Arc::new(Interval) as Arc<dyn PosetKind>)
}

pub trait ComplexKind: Send + Sync {
    fn name(&self) -> &'static str;
    fn build(&self, session: &Session, rank: Option<usize>) -> Result<ComplexSummary>;
}

struct OrderComplex;
struct IntervalComplex;
struct Stratum;

impl ComplexKind for OrderComplex {
    fn name(&self) -> &'static str {
        "order"
    }

    fn build(&self, session: &Session, _rank: Option<usize>) -> Result<ComplexSummary> {
        match session {
            Session::Sym { mg, target, .. } => build_order_complex(mg, target),
            Session::Int { mg, target } => build_order_complex(mg, target),
        }
    }
}

impl ComplexKind for IntervalComplex {
    fn name(&self) -> &'static str {
        "interval"
    }

    fn build(&self, session: &Session, _rank: Option<usize>) -> Result<ComplexSummary> {
        match session {
            Session::Sym { mg, target, .. } => build_interval_complex(mg, target),
            Session::Int { mg, target } => build_interval_complex(mg, target),
        }
    }
}

impl ComplexKind for Stratum {
    fn name(&self) -> &'static str {
        "stratum"
    }

    fn build(&self, session: &Session, rank: Option<usize>) -> Result<ComplexSummary> {
        let r = rank.ok_or_else(|| Error::Usage("complex `stratum` needs --rank".into()))?;
        match session {
            Session::Sym { mg, target, .. } => stratum_complex(mg, target, r).map(|s| s.summary),
            Session::Int { mg, target } => stratum_complex(mg, target, r).map(|s| s.summary),
        }
    }
}

pub fn complex_kinds() -> Registry<dyn ComplexKind> {
    Registry::new("complex kind")
        .with("order", || Arc::new(OrderComplex) as Arc<dyn ComplexKind>)
        .with("interval", || Arc::new(IntervalComplex) as Arc<dyn ComplexKind>)
        .with("stratum", || Arc::new(Stratum) as Arc<dyn ComplexKind>)
}
