//! Golden CLI corpus. Each case names the command line, its standard input,
//! the expected exit status and the output the library produces for the same
//! operation. Expected standard output is also frozen under
//! `tests/fixtures/cli/<name>.stdout`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

use unplugged::card::{self, CodingCard};
use unplugged::cipher::caesar::{self, CaesarKey, FrequencyTable};
use unplugged::cipher::peg::{self, PegKey};
use unplugged::cipher::pigpen::{self, PigpenTable};
use unplugged::cli::format_ranking;
use unplugged::grid::{Inventory, Mosaic};
use unplugged::sim::{self, MachineState};
use unplugged::turtle::{Canvas, TurtleProgram};
use unplugged::worksheet;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub stdin: &'static str,
    pub code: i32,
    /// Standard output computed by calling the library directly.
    pub library: fn() -> String,
}

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn input(name: &str) -> String {
    fs::read_to_string(manifest_dir().join("tests/fixtures/inputs").join(name)).unwrap()
}

fn nl(s: impl AsRef<str>) -> String {
    format!("{}\n", s.as_ref())
}

fn empty() -> String {
    String::new()
}

pub fn cases() -> Vec<Case> {
    vec![
        Case {
            name: "card_exec",
            args: &["card", "exec", "-"],
            stdin: "A: 3R 4B 5Y",
            code: 0,
            library: || nl(CodingCard::parse("A: 3R 4B 5Y").unwrap().execute().unwrap().render()),
        },
        Case {
            name: "card_exec_invalid",
            args: &["card", "exec", "-"],
            stdin: "A: 3R 4B 4Y",
            code: 1,
            library: empty,
        },
        Case {
            name: "card_validate_ok",
            args: &["card", "validate", "tests/fixtures/inputs/card_ok.txt"],
            stdin: "",
            code: 0,
            library: || {
                assert!(CodingCard::parse(&input("card_ok.txt")).unwrap().validate().is_valid());
                nl("OK")
            },
        },
        Case {
            name: "card_validate_rowsum",
            args: &["card", "validate", "-"],
            stdin: "A: 3R 4B 4Y\n",
            code: 1,
            library: empty,
        },
        Case {
            name: "card_encode",
            args: &["card", "encode", "tests/fixtures/inputs/target.txt"],
            stdin: "",
            code: 0,
            library: || {
                let m = Mosaic::parse(&input("target.txt")).unwrap();
                nl(CodingCard::encode(&m).unwrap().print())
            },
        },
        Case {
            name: "card_encode_partial",
            args: &["card", "encode", "-"],
            stdin: "RRR.BBBBYYYY\n",
            code: 1,
            library: empty,
        },
        Case {
            name: "card_normalize",
            args: &["card", "normalize", "-"],
            stdin: "A: 2R 1R 9Y\n",
            code: 0,
            library: || nl(CodingCard::parse("A: 2R 1R 9Y").unwrap().normalize().print()),
        },
        Case {
            name: "card_print",
            args: &["card", "print", "-"],
            stdin: "COLS 4\nB:  4R\nA: 2Y 2K\n",
            code: 0,
            library: || nl(CodingCard::parse("COLS 4\nB:  4R\nA: 2Y 2K\n").unwrap().print()),
        },
        Case {
            name: "card_diff",
            args: &[
                "card",
                "diff",
                "tests/fixtures/inputs/target.txt",
                "tests/fixtures/inputs/actual.txt",
            ],
            stdin: "",
            code: 1,
            library: || {
                let t = Mosaic::parse(&input("target.txt")).unwrap();
                let a = Mosaic::parse(&input("actual.txt")).unwrap();
                card::diff(&t, &a)
                    .unwrap()
                    .iter()
                    .map(|m| nl(m.to_string()))
                    .collect()
            },
        },
        Case {
            name: "card_diff_equal",
            args: &[
                "card",
                "diff",
                "tests/fixtures/inputs/target.txt",
                "tests/fixtures/inputs/target.txt",
            ],
            stdin: "",
            code: 0,
            library: empty,
        },
        Case {
            name: "card_worksheet",
            args: &["card", "worksheet", "--answers", "-"],
            stdin: "RRRBBBBYYYYY\n",
            code: 0,
            library: || {
                let m = Mosaic::parse("RRRBBBBYYYYY").unwrap();
                nl(worksheet::cards(&m).unwrap().render(true))
            },
        },
        Case {
            name: "turtle_run",
            args: &["turtle", "run", "-", "--rows", "1", "--cols", "4"],
            stdin: "(E blue)3",
            code: 0,
            library: || {
                let p = TurtleProgram::parse("(E blue)3").unwrap();
                nl(p.interpret(4, 1).unwrap().canvas.render())
            },
        },
        Case {
            name: "turtle_run_offgrid",
            args: &["turtle", "run", "-", "--rows", "3", "--cols", "3"],
            stdin: "N",
            code: 1,
            library: empty,
        },
        Case {
            name: "turtle_run_missing_size",
            args: &["turtle", "run", "-"],
            stdin: "E",
            code: 2,
            library: empty,
        },
        Case {
            name: "turtle_fmt",
            args: &["turtle", "fmt", "-"],
            stdin: "START r\n( E  B )3 N\n",
            code: 0,
            library: || nl(TurtleProgram::parse("START r\n( E  B )3 N\n").unwrap().print()),
        },
        Case {
            name: "turtle_compile",
            args: &["turtle", "compile", "-"],
            stdin: "Y.K\n..R\nB..\n",
            code: 0,
            library: || {
                let canvas = Canvas::parse("Y.K\n..R\nB..").unwrap();
                nl(TurtleProgram::compile(&canvas).print())
            },
        },
        Case {
            name: "caesar_enc",
            args: &["caesar", "enc", "--shift", "3", "-"],
            stdin: "Ave, Caesar!\n",
            code: 0,
            library: || caesar::encrypt("Ave, Caesar!\n", CaesarKey::new(3).unwrap()),
        },
        Case {
            name: "caesar_dec",
            args: &["caesar", "dec", "--shift", "3", "-"],
            stdin: "Dyh, Fdhvdu!\n",
            code: 0,
            library: || caesar::decrypt("Dyh, Fdhvdu!\n", CaesarKey::new(3).unwrap()),
        },
        Case {
            name: "caesar_bad_shift",
            args: &["caesar", "enc", "--shift", "30", "-"],
            stdin: "A",
            code: 1,
            library: empty,
        },
        Case {
            name: "caesar_crack",
            args: &["caesar", "crack", "-"],
            stdin: "Pa dhz h iypnoa jvsk khf pu Hwyps, huk aol jsvjrz dlyl zayprpun aopyallu.",
            code: 0,
            library: || {
                let ranked = caesar::crack(
                    "Pa dhz h iypnoa jvsk khf pu Hwyps, huk aol jsvjrz dlyl zayprpun aopyallu.",
                    &FrequencyTable::english(),
                )
                .unwrap();
                format_ranking(&ranked)
            },
        },
        Case {
            name: "caesar_crack_no_letters",
            args: &["caesar", "crack", "-"],
            stdin: "!!!",
            code: 1,
            library: empty,
        },
        Case {
            name: "pigpen_enc",
            args: &["pigpen", "enc", "-"],
            stdin: "ciao mondo\n",
            code: 0,
            library: || nl(pigpen::encode_message("ciao mondo", &PigpenTable::classic()).unwrap()),
        },
        Case {
            name: "pigpen_dec",
            args: &["pigpen", "dec", "-"],
            stdin: "#3 #9 #1 #6.\n",
            code: 0,
            library: || nl(pigpen::decode_message("#3 #9 #1 #6.", &PigpenTable::classic()).unwrap()),
        },
        Case {
            name: "pigpen_unknown_symbol",
            args: &["pigpen", "dec", "-"],
            stdin: "#10",
            code: 1,
            library: empty,
        },
        Case {
            name: "peg_enc",
            args: &["peg", "enc", "--key", "default", "CAB"],
            stdin: "",
            code: 0,
            library: || nl(peg::format_pairs(&peg::encrypt("CAB", &PegKey::default_key(), false).unwrap())),
        },
        Case {
            name: "peg_enc_backwards",
            args: &["peg", "enc", "--key", "default", "--backwards", "CAB"],
            stdin: "",
            code: 0,
            library: || nl(peg::format_pairs(&peg::encrypt("CAB", &PegKey::default_key(), true).unwrap())),
        },
        Case {
            name: "peg_enc_keyfile",
            args: &["peg", "enc", "--key", "tests/fixtures/inputs/key_seed0.txt", "CIAO", "MONDO"],
            stdin: "",
            code: 0,
            library: || {
                let key = PegKey::load(&input("key_seed0.txt")).unwrap();
                let words: Vec<_> = ["CIAO", "MONDO"]
                    .iter()
                    .map(|w| peg::encrypt(w, &key, false).unwrap())
                    .collect();
                nl(peg::format_message(&words))
            },
        },
        Case {
            name: "peg_dec",
            args: &["peg", "dec", "--key", "default", "OG WW BG / WR"],
            stdin: "",
            code: 0,
            library: || {
                let key = PegKey::default_key();
                let words = peg::parse_message("OG WW BG / WR").unwrap();
                nl(words
                    .iter()
                    .map(|w| peg::decrypt(w, &key, false))
                    .collect::<Vec<_>>()
                    .join(" "))
            },
        },
        Case {
            name: "peg_enc_unmappable",
            args: &["peg", "enc", "--key", "default", "C4B"],
            stdin: "",
            code: 1,
            library: empty,
        },
        Case {
            name: "peg_keygen",
            args: &["peg", "keygen", "--seed", "0"],
            stdin: "",
            code: 0,
            library: || nl(PegKey::generate(0).save()),
        },
        Case {
            name: "peg_worksheet",
            args: &[
                "peg",
                "worksheet",
                "--key",
                "default",
                "--backwards",
                "--answers",
                "tests/fixtures/inputs/words.txt",
            ],
            stdin: "",
            code: 0,
            library: || {
                let text = input("words.txt");
                let words: Vec<&str> = text.split_whitespace().collect();
                nl(worksheet::cipher(&words, &PegKey::default_key(), true)
                    .unwrap()
                    .render(true))
            },
        },
        Case {
            name: "sim_run",
            args: &[
                "sim",
                "run",
                "--feed",
                "tests/fixtures/inputs/feed.txt",
                "--rows",
                "4",
                "tests/fixtures/inputs/script.txt",
            ],
            stdin: "",
            code: 0,
            library: || {
                let feed = sim::parse_feed(&input("feed.txt")).unwrap();
                let m = MachineState::new(feed, 4).unwrap();
                let (end, log) = m.run_script(&input("script.txt")).unwrap();
                nl(sim::format_outcome(&end, &log))
            },
        },
        Case {
            name: "sim_run_empty_feed",
            args: &["sim", "run", "--feed", "Y", "-"],
            stdin: "L 1\nL 1\n",
            code: 1,
            library: empty,
        },
        Case {
            name: "sim_run_bad_syntax",
            args: &["sim", "run", "--feed", "YR", "-"],
            stdin: "L 13\n",
            code: 1,
            library: empty,
        },
        Case {
            name: "sim_synth",
            args: &[
                "sim",
                "synth",
                "--feed",
                "WWBBYYYRKKR",
                "--rows",
                "3",
                "tests/fixtures/inputs/reachable.txt",
            ],
            stdin: "",
            code: 0,
            library: || {
                let target = Mosaic::parse(&input("reachable.txt")).unwrap();
                let feed = sim::parse_feed("WWBBYYYRKKR").unwrap();
                nl(sim::format_script(&sim::synthesize_script(&target, &feed, 3).unwrap()))
            },
        },
        Case {
            name: "mosaic_random",
            args: &["mosaic", "random", "--seed", "7", "--rows", "4", "--cols", "12", "--full"],
            stdin: "",
            code: 0,
            library: || nl(worksheet::random_mosaic(7, 4, 12, true).unwrap().render()),
        },
        Case {
            name: "mosaic_random_sparse",
            args: &["mosaic", "random", "--seed", "11", "--rows", "5", "--cols", "6"],
            stdin: "",
            code: 0,
            library: || nl(worksheet::random_mosaic(11, 5, 6, false).unwrap().render()),
        },
        Case {
            name: "mosaic_check_violation",
            args: &["mosaic", "check", "-"],
            stdin: "WWWWWWWWWWWW\nWWWWWWWWWWWW\n",
            code: 1,
            library: || {
                let m = Mosaic::parse("WWWWWWWWWWWW\nWWWWWWWWWWWW").unwrap();
                Inventory::default()
                    .check(&m)
                    .usage
                    .iter()
                    .map(|u| nl(u.to_string()))
                    .collect()
            },
        },
        Case {
            name: "usage_no_subcommand",
            args: &["card"],
            stdin: "",
            code: 2,
            library: empty,
        },
        Case {
            name: "usage_missing_file",
            args: &["card", "exec", "tests/fixtures/inputs/does_not_exist.txt"],
            stdin: "",
            code: 2,
            library: empty,
        },
    ]
}

pub struct Observed {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run_binary(case: &Case) -> Observed {
    let mut child = Command::new(env!("CARGO_BIN_EXE_unplugged"))
        .args(case.args)
        .current_dir(manifest_dir())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn cli");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(case.stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    Observed {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn golden_path(case: &Case) -> PathBuf {
    manifest_dir()
        .join("tests/fixtures/cli")
        .join(format!("{}.stdout", case.name))
}

/// Checks one case; returns a description of every discrepancy.
pub fn check(case: &Case) -> Vec<String> {
    let observed = run_binary(case);
    let library = (case.library)();
    let path = golden_path(case);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, &observed.stdout).unwrap();
    }
    let golden = fs::read_to_string(Path::new(&path)).unwrap_or_else(|_| "<missing>".into());

    let mut problems = Vec::new();
    if observed.code != case.code {
        problems.push(format!(
            "exit {} (expected {}), stderr: {}",
            observed.code, case.code, observed.stderr
        ));
    }
    if observed.stdout != library {
        problems.push(format!(
            "stdout {:?} differs from library {:?}",
            observed.stdout, library
        ));
    }
    if observed.stdout != golden {
        problems.push(format!(
            "stdout {:?} differs from golden {:?}",
            observed.stdout, golden
        ));
    }
    if case.code != 0 && observed.stderr.is_empty() && case.name != "card_diff" {
        problems.push("failure without a diagnostic".into());
    }
    problems
}
