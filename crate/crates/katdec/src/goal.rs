use katdec_core::hyp::Equation;
use katdec_core::whilelang::hoare_encode;
use katdec_core::{HoareTriple, Prog, Signature};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Assumption {
    Equation(Equation),
    /// A Hoare triple, used through its encoding `[A]p[¬B] = 0`.
    Triple(HoareTriple),
}

impl Assumption {
    pub fn to_equation(&self) -> Equation {
        match self {
            Assumption::Equation(e) => e.clone(),
            Assumption::Triple(t) => hoare_encode(t),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Show {
    Equation(Equation),
    ProgEquiv(Prog, Prog),
    Triple(HoareTriple),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoalFile {
    pub signature: Signature,
    pub assumptions: Vec<Assumption>,
    pub show: Show,
}

impl GoalFile {
    pub fn hypotheses(&self) -> Vec<Equation> {
        self.assumptions.iter().map(Assumption::to_equation).collect()
    }
}
