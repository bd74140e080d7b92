//! Every acceptance criterion at its time budget, one PASS/FAIL line each,
//! plus the table CSV against the golden file. Runs without the libtest
//! harness so the lines are always shown.

use std::process::{Command, ExitCode};

use qgauss_core::selftest;

fn table_csv_matches_golden() -> bool {
    let out = Command::new(env!("CARGO_BIN_EXE_qgauss"))
        .args(["table-ck", "--max-i", "8", "--format", "csv"])
        .output()
        .expect("binary runs");
    out.status.success() && out.stdout == include_bytes!("golden/ck_table_8.csv")
}

fn main() -> ExitCode {
    let mut ok = true;
    for c in selftest::criteria() {
        let o = c.run();
        println!("{}", o.line());
        ok &= o.passed();
    }
    let golden = table_csv_matches_golden();
    println!(
        "{}  table-ck --max-i 8 --format csv equals golden/ck_table_8.csv",
        if golden { "PASS" } else { "FAIL" }
    );
    if ok && golden {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
