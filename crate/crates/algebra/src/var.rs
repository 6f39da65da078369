use std::fmt;

/// Variable namespaces, in their sort order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ns {
    Alpha,
    Beta,
    C,
    D,
    Z,
    T,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId {
    pub ns: Ns,
    pub index: i32,
}

impl VarId {
    pub const fn new(ns: Ns, index: i32) -> Self {
        VarId { ns, index }
    }
    pub const fn alpha(i: usize) -> Self {
        VarId::new(Ns::Alpha, i as i32)
    }
    pub const fn beta(i: usize) -> Self {
        VarId::new(Ns::Beta, i as i32)
    }
    pub const fn c(i: usize) -> Self {
        VarId::new(Ns::C, i as i32)
    }
    pub const fn d(i: i32) -> Self {
        VarId::new(Ns::D, i)
    }
    pub const fn z(i: usize) -> Self {
        VarId::new(Ns::Z, i as i32)
    }
    pub const fn t() -> Self {
        VarId::new(Ns::T, 0)
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ns {
            Ns::Alpha => write!(f, "a{}", self.index),
            Ns::Beta => write!(f, "b{}", self.index),
            Ns::C => write!(f, "c{}", self.index),
            Ns::D => {
                if self.index < 0 {
                    write!(f, "d_{{{}}}", self.index)
                } else {
                    write!(f, "d_{}", self.index)
                }
            }
            Ns::Z => write!(f, "z{}", self.index),
            Ns::T => write!(f, "t"),
        }
    }
}
