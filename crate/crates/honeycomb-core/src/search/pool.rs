use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;

/// Runs `f` over `tasks` on up to `workers` threads and returns the results
/// in task order. The task list is fixed up front and results land in
/// per-task slots, so the output does not depend on scheduling.
pub(crate) fn run_ordered<T, R, F>(tasks: &[T], workers: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send + Sync,
    F: Fn(&T) -> R + Sync,
{
    if workers <= 1 || tasks.len() <= 1 {
        return tasks.iter().map(&f).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Vec<OnceLock<R>> = tasks.iter().map(|_| OnceLock::new()).collect();
    std::thread::scope(|scope| {
        for _ in 0..workers.min(tasks.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= tasks.len() {
                    break;
                }
                let result = f(&tasks[i]);
                assert!(slots[i].set(result).is_ok(), "task {i} ran twice");
            });
        }
    });
    slots
        .into_iter()
        .map(|slot| slot.into_inner().expect("every task slot filled"))
        .collect()
}
