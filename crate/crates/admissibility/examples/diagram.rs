//! The implication diagram between admissibility conditions and the ledger
//! of examples separating them.

use admissibility::engine::*;

fn list<'a>(ids: impl IntoIterator<Item = &'a ConditionId>) -> String {
    ids.into_iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn main() {
    let diagram = ImplicationDiagram::standard();
    let ledger = standard_ledger();
    let report = ledger_check(&diagram, &ledger);
    println!("{} implications after closure, acyclic: {}", report.closure.len(), report.is_dag);
    for ex in &ledger.examples {
        let closure = diagram.closure();
        let full = ex.signature.propagate(&closure);
        println!("{:<9} {:<48} satisfied {:<26} violated {}", ex.name, ex.setting, list(&full.satisfied), list(&full.violated));
    }
    for (pair, example) in report.refuted.iter().take(6) {
        println!("{pair} refuted by {example}");
    }
    println!("... {} pairs refuted, {} unrefuted, ledger passes: {}", report.refuted.len(), report.unrefuted.len(), report.passes());

    let a = ConditionId::new(5).expect("condition 5");
    let b = ConditionId::new(1).expect("condition 1");
    println!("{a} implies {b}: {}", diagram.implies(a, b));
}
