//! Data-parallel helpers. With the `parallel` feature these run on the rayon
//! pool; without it they fall back to plain iterators. Every helper returns
//! results in input order, so output never depends on scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::graph::Graph;
use crate::labeling::{self, EdgeLabeling};
use crate::strong;

/// How a batch should be executed. `Parallel` degrades to `Sequential` when
/// the crate is built without the `parallel` feature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Order-preserving map.
pub fn map<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// First `Some` in input order.
pub fn find_first_with<T, R, F>(exec: Exec, items: &[T], f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().find_map_first(f);
    }
    let _ = exec;
    items.iter().find_map(f)
}

pub(crate) fn find_first<T, R, F>(items: &[T], f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    find_first_with(Exec::default(), items, f)
}

/// Recognition results for one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub chordal: bool,
    pub strongly_chordal: bool,
    pub unit_interval: bool,
}

pub fn classify(g: &Graph) -> Classification {
    Classification {
        chordal: crate::chordal::is_chordal(g),
        strongly_chordal: strong::is_strongly_chordal(g),
        unit_interval: strong::is_unit_interval(g),
    }
}

pub fn classify_all(exec: Exec, graphs: &[Graph]) -> Vec<Classification> {
    map(exec, graphs, classify)
}

/// Constructs and verifies a labeling for every strongly chordal graph in the
/// batch; `None` for the rest.
pub fn label_all(exec: Exec, graphs: &[Graph]) -> Vec<Option<EdgeLabeling>> {
    map(exec, graphs, |g| {
        let lab = labeling::construct_mat_labeling(g).ok()?;
        labeling::verify_mat_labeling(&lab).is_ok().then_some(lab)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn sequential_and_parallel_agree() {
        let graphs = vec![
            named::sun(3),
            named::seven_vertex_example(),
            named::cycle(5),
            named::rising_sun(),
            named::claw(),
        ];
        assert_eq!(
            classify_all(Exec::Sequential, &graphs),
            classify_all(Exec::Parallel, &graphs)
        );
        assert_eq!(
            label_all(Exec::Sequential, &graphs),
            label_all(Exec::Parallel, &graphs)
        );
    }

    #[test]
    fn find_first_respects_order() {
        let items: Vec<u32> = (0..1000).collect();
        for exec in [Exec::Sequential, Exec::Parallel] {
            assert_eq!(
                find_first_with(exec, &items, |&x| (x % 97 == 96).then_some(x)),
                Some(96)
            );
        }
    }
}
