//! Load the JSON corpus and run CLI commands in-process.

use std::path::PathBuf;

use crossmod::cli::{run, Command, RunOptions, Workspace};
use crossmod::Limits;

fn main() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/corpus");
    let limits = Limits::default();
    let ws = Workspace::load(&[dir], &limits).unwrap();
    for (kind, names) in ws.names().into_iter().filter(|(_, n)| !n.is_empty()) {
        println!(
            "{kind}: {}",
            names.into_iter().collect::<Vec<_>>().join(", ")
        );
    }
    let opts = RunOptions {
        limits,
        timing: false,
    };
    let commands = [
        Command::Pi {
            xmod: "innerZ4".into(),
        },
        Command::H1 {
            group: "Z2".into(),
            xmod: "discreteS3".into(),
        },
        Command::Lift {
            cocycle: "carryZ3".into(),
            butterfly: "idShiftedZ3".into(),
        },
        Command::BraidCheck {
            braiding: "pairing".into(),
        },
    ];
    for cmd in &commands {
        let report = run(&ws, cmd, &opts);
        print!("{}", report.to_text());
        println!("exit code {}\n", report.exit_code());
    }
}
