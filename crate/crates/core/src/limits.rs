/// Size limits for the exhaustive constructions.
///
/// Every construction that can blow up takes its limits explicitly; nothing
/// is read from the environment inside the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order a [`GroupTable`](crate::grpcore::GroupTable) may have.
    pub order_cap: usize,
    /// Largest finite abelian group whose automorphisms are enumerated.
    pub aut_source_cap: u64,
    /// Largest group whose full subgroup lattice is enumerated.
    pub lattice_cap: usize,
}

impl Limits {
    pub const DEFAULT_ORDER_CAP: usize = 10080;
    pub const DEFAULT_AUT_SOURCE_CAP: u64 = 512;
    pub const DEFAULT_LATTICE_CAP: usize = 96;

    pub fn with_order_cap(order_cap: usize) -> Self {
        Limits { order_cap, ..Self::default() }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            order_cap: Self::DEFAULT_ORDER_CAP,
            aut_source_cap: Self::DEFAULT_AUT_SOURCE_CAP,
            lattice_cap: Self::DEFAULT_LATTICE_CAP,
        }
    }
}
