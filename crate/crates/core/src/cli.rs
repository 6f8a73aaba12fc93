//! Command-line front end.
//!
//! Every subcommand parses its input with the library's text formats, calls
//! one library operation and prints the result in the same formats. Exit
//! status is 0 on success, 1 when the input is well formed but the operation
//! fails (invalid card, cipher error, script error, differing mosaics) and 2
//! for usage problems, including unreadable files.

use std::fs;
use std::io::Read;

use clap::{Args, Parser, Subcommand};

use crate::card::{self, CodingCard};
use crate::cipher::caesar::{self, CaesarKey, FrequencyTable};
use crate::cipher::peg::{self, PegKey};
use crate::cipher::pigpen::{self, PigpenTable};
use crate::grid::{Inventory, Mosaic};
use crate::sim::{self, MachineState};
use crate::turtle::{Canvas, TurtleProgram};
use crate::worksheet;

#[derive(Debug, Parser)]
#[command(name = "unplugged", version, about = "Coding cards, grid drawings, ciphers and the ball machine")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Coding cards
    #[command(subcommand)]
    Card(CardCmd),
    /// Directional drawing programs
    #[command(subcommand)]
    Turtle(TurtleCmd),
    /// Caesar shift cipher
    #[command(subcommand)]
    Caesar(CaesarCmd),
    /// Pigpen cipher
    #[command(subcommand)]
    Pigpen(PigpenCmd),
    /// Peg Code color-pair cipher
    #[command(subcommand)]
    Peg(PegCmd),
    /// Ball machine simulator
    #[command(subcommand)]
    Sim(SimCmd),
    /// Mosaic utilities
    #[command(subcommand)]
    Mosaic(MosaicCmd),
}

#[derive(Debug, Subcommand)]
enum CardCmd {
    /// Run a card and print the mosaic it builds
    Exec { file: String },
    /// Write the canonical card for a mosaic
    Encode { file: String },
    /// Check that every row adds up to the card width
    Validate { file: String },
    /// Merge adjacent runs of the same color
    Normalize { file: String },
    /// Reprint a card in canonical layout
    Print { file: String },
    /// List cells where `actual` differs from `target`
    Diff { target: String, actual: String },
    /// Worksheet asking for the card of a mosaic
    Worksheet {
        file: String,
        #[arg(long)]
        answers: bool,
    },
}

#[derive(Debug, Args)]
struct GridSize {
    #[arg(long)]
    rows: Option<usize>,
    #[arg(long)]
    cols: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum TurtleCmd {
    /// Run a program and print the painted grid
    Run {
        file: String,
        #[command(flatten)]
        size: GridSize,
    },
    /// Reprint a program in canonical form
    Fmt {
        file: String,
        #[command(flatten)]
        size: GridSize,
    },
    /// Write a program that redraws a mosaic
    Compile { file: String },
}

#[derive(Debug, Subcommand)]
enum CaesarCmd {
    Enc {
        #[arg(long)]
        shift: u8,
        file: String,
    },
    Dec {
        #[arg(long)]
        shift: u8,
        file: String,
    },
    /// Rank all shifts by chi-squared fit to letter frequencies
    Crack {
        #[arg(long)]
        freq: Option<String>,
        file: String,
    },
}

#[derive(Debug, Subcommand)]
enum PigpenCmd {
    Enc { file: String },
    Dec { file: String },
}

#[derive(Debug, Args)]
struct KeyArgs {
    /// Key file, or `default`
    #[arg(long)]
    key: String,
    #[arg(long)]
    backwards: bool,
}

#[derive(Debug, Subcommand)]
enum PegCmd {
    Enc {
        #[command(flatten)]
        key: KeyArgs,
        #[arg(required = true)]
        word: Vec<String>,
    },
    Dec {
        #[command(flatten)]
        key: KeyArgs,
        #[arg(required = true)]
        word: Vec<String>,
    },
    /// Generate a key from a seed
    Keygen {
        #[arg(long)]
        seed: u64,
    },
    /// Worksheet of encrypted words, one word per line of the file
    Worksheet {
        #[command(flatten)]
        key: KeyArgs,
        #[arg(long)]
        answers: bool,
        file: String,
    },
}

#[derive(Debug, Subcommand)]
enum SimCmd {
    /// Run a script and print the screen, the feed and any peeks
    Run {
        /// Color codes (`FEED YYRB...`) or a file holding them
        #[arg(long)]
        feed: String,
        #[arg(long, default_value_t = sim::DEFAULT_ROWS)]
        rows: usize,
        file: String,
    },
    /// Write a script that builds a mosaic from the given feed
    Synth {
        #[arg(long)]
        feed: String,
        #[arg(long, default_value_t = sim::DEFAULT_ROWS)]
        rows: usize,
        file: String,
    },
}

#[derive(Debug, Subcommand)]
enum MosaicCmd {
    /// Random gravity-valid mosaic within the ball inventory
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = sim::DEFAULT_ROWS)]
        rows: usize,
        #[arg(long, default_value_t = card::DEFAULT_COLUMNS)]
        cols: usize,
        #[arg(long)]
        full: bool,
    },
    /// Ball usage per color against the inventory
    Check { file: String },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Domain(String),
    Usage(String),
}

type CmdResult = Result<Output, Failure>;

fn domain(e: impl std::fmt::Display) -> Failure {
    Failure::Domain(e.to_string())
}

fn ok(text: impl Into<String>) -> CmdResult {
    Ok(Output {
        code: 0,
        stdout: text.into(),
        stderr: String::new(),
    })
}

fn line(text: impl AsRef<str>) -> CmdResult {
    ok(format!("{}\n", text.as_ref()))
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<String, Failure> {
        if path == "-" {
            let mut text = String::new();
            self.stdin
                .read_to_string(&mut text)
                .map_err(|e| Failure::Usage(format!("cannot read standard input: {e}")))?;
            Ok(text)
        } else {
            fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))
        }
    }

    fn key(&mut self, spec: &str) -> Result<PegKey, Failure> {
        if spec == "default" {
            Ok(PegKey::default_key())
        } else {
            PegKey::load(&self.read(spec)?).map_err(domain)
        }
    }

    fn feed(&mut self, spec: &str) -> Result<Vec<crate::grid::Color>, Failure> {
        let text = if spec != "-" && std::path::Path::new(spec).is_file() {
            self.read(spec)?
        } else {
            spec.to_string()
        };
        sim::parse_feed(&text).map_err(domain)
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if code == 0 {
                Output {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Output {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let mut io = Io { stdin };
    match dispatch(cli.command, &mut io) {
        Ok(out) => out,
        Err(Failure::Domain(msg)) => Output {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Usage(msg)) => Output {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn dispatch(command: Command, io: &mut Io<'_>) -> CmdResult {
    match command {
        Command::Card(cmd) => card_cmd(cmd, io),
        Command::Turtle(cmd) => turtle_cmd(cmd, io),
        Command::Caesar(cmd) => caesar_cmd(cmd, io),
        Command::Pigpen(cmd) => pigpen_cmd(cmd, io),
        Command::Peg(cmd) => peg_cmd(cmd, io),
        Command::Sim(cmd) => sim_cmd(cmd, io),
        Command::Mosaic(cmd) => mosaic_cmd(cmd, io),
    }
}

fn read_card(io: &mut Io<'_>, file: &str) -> Result<CodingCard, Failure> {
    CodingCard::parse(&io.read(file)?).map_err(domain)
}

fn read_mosaic(io: &mut Io<'_>, file: &str) -> Result<Mosaic, Failure> {
    Mosaic::parse(&io.read(file)?).map_err(domain)
}

fn card_cmd(cmd: CardCmd, io: &mut Io<'_>) -> CmdResult {
    match cmd {
        CardCmd::Exec { file } => line(read_card(io, &file)?.execute().map_err(domain)?.render()),
        CardCmd::Encode { file } => {
            let mosaic = read_mosaic(io, &file)?;
            line(CodingCard::encode(&mosaic).map_err(domain)?.print())
        }
        CardCmd::Validate { file } => {
            let report = read_card(io, &file)?.validate();
            if report.is_valid() {
                line("OK")
            } else {
                let lines: Vec<String> =
                    report.violations.iter().map(ToString::to_string).collect();
                Err(Failure::Domain(lines.join("\nerror: ")))
            }
        }
        CardCmd::Normalize { file } => line(read_card(io, &file)?.normalize().print()),
        CardCmd::Print { file } => line(read_card(io, &file)?.print()),
        CardCmd::Diff { target, actual } => {
            let target = read_mosaic(io, &target)?;
            let actual = read_mosaic(io, &actual)?;
            let mismatches = card::diff(&target, &actual).map_err(domain)?;
            let text: String = mismatches.iter().map(|m| format!("{m}\n")).collect();
            Ok(Output {
                code: i32::from(!mismatches.is_empty()),
                stdout: text,
                stderr: String::new(),
            })
        }
        CardCmd::Worksheet { file, answers } => {
            let mosaic = read_mosaic(io, &file)?;
            line(worksheet::cards(&mosaic).map_err(domain)?.render(answers))
        }
    }
}

fn turtle_cmd(cmd: TurtleCmd, io: &mut Io<'_>) -> CmdResult {
    match cmd {
        TurtleCmd::Run { file, size } => {
            let (Some(rows), Some(cols)) = (size.rows, size.cols) else {
                return Err(Failure::Usage(
                    "turtle run needs --rows N --cols N".into(),
                ));
            };
            let program = TurtleProgram::parse(&io.read(&file)?).map_err(domain)?;
            line(program.interpret(cols, rows).map_err(domain)?.canvas.render())
        }
        TurtleCmd::Fmt { file, .. } => {
            line(TurtleProgram::parse(&io.read(&file)?).map_err(domain)?.print())
        }
        TurtleCmd::Compile { file } => {
            let canvas = Canvas::parse(&io.read(&file)?).map_err(domain)?;
            line(TurtleProgram::compile(&canvas).print())
        }
    }
}

fn caesar_cmd(cmd: CaesarCmd, io: &mut Io<'_>) -> CmdResult {
    match cmd {
        CaesarCmd::Enc { shift, file } => {
            let key = CaesarKey::new(shift).map_err(domain)?;
            ok(caesar::encrypt(&io.read(&file)?, key))
        }
        CaesarCmd::Dec { shift, file } => {
            let key = CaesarKey::new(shift).map_err(domain)?;
            ok(caesar::decrypt(&io.read(&file)?, key))
        }
        CaesarCmd::Crack { freq, file } => {
            let table = match freq {
                Some(path) => FrequencyTable::parse(&io.read(&path)?).map_err(domain)?,
                None => FrequencyTable::english(),
            };
            let ranked = caesar::crack(&io.read(&file)?, &table).map_err(domain)?;
            ok(format_ranking(&ranked))
        }
    }
}

/// One `<shift> <score>` line per candidate, best first.
pub fn format_ranking(ranked: &[(CaesarKey, f64)]) -> String {
    ranked
        .iter()
        .map(|(key, score)| format!("{key} {score:.4}\n"))
        .collect()
}

fn pigpen_cmd(cmd: PigpenCmd, io: &mut Io<'_>) -> CmdResult {
    let table = PigpenTable::classic();
    match cmd {
        PigpenCmd::Enc { file } => {
            line(pigpen::encode_message(&io.read(&file)?, &table).map_err(domain)?)
        }
        PigpenCmd::Dec { file } => {
            line(pigpen::decode_message(&io.read(&file)?, &table).map_err(domain)?)
        }
    }
}

fn peg_cmd(cmd: PegCmd, io: &mut Io<'_>) -> CmdResult {
    match cmd {
        PegCmd::Enc { key, word } => {
            let peg_key = io.key(&key.key)?;
            let words = word
                .iter()
                .flat_map(|w| w.split_whitespace())
                .map(|w| peg::encrypt(w, &peg_key, key.backwards))
                .collect::<Result<Vec<_>, _>>()
                .map_err(domain)?;
            line(peg::format_message(&words))
        }
        PegCmd::Dec { key, word } => {
            let peg_key = io.key(&key.key)?;
            let words = peg::parse_message(&word.join(" ")).map_err(domain)?;
            let plain: Vec<String> = words
                .iter()
                .map(|w| peg::decrypt(w, &peg_key, key.backwards))
                .collect();
            line(plain.join(" "))
        }
        PegCmd::Keygen { seed } => line(PegKey::generate(seed).save()),
        PegCmd::Worksheet { key, answers, file } => {
            let peg_key = io.key(&key.key)?;
            let text = io.read(&file)?;
            let words: Vec<&str> = text.split_whitespace().collect();
            let sheet = worksheet::cipher(&words, &peg_key, key.backwards).map_err(domain)?;
            line(sheet.render(answers))
        }
    }
}

fn sim_cmd(cmd: SimCmd, io: &mut Io<'_>) -> CmdResult {
    match cmd {
        SimCmd::Run { feed, rows, file } => {
            let feed = io.feed(&feed)?;
            let machine = MachineState::new(feed, rows).map_err(domain)?;
            let script = io.read(&file)?;
            let (end, log) = machine.run_script(&script).map_err(domain)?;
            line(sim::format_outcome(&end, &log))
        }
        SimCmd::Synth { feed, rows, file } => {
            let feed = io.feed(&feed)?;
            let target = read_mosaic(io, &file)?;
            let script = sim::synthesize_script(&target, &feed, rows).map_err(domain)?;
            let text = sim::format_script(&script);
            ok(if text.is_empty() { text } else { text + "\n" })
        }
    }
}

fn mosaic_cmd(cmd: MosaicCmd, io: &mut Io<'_>) -> CmdResult {
    match cmd {
        MosaicCmd::Random {
            seed,
            rows,
            cols,
            full,
        } => line(
            worksheet::random_mosaic(seed, rows, cols, full)
                .map_err(domain)?
                .render(),
        ),
        MosaicCmd::Check { file } => {
            let report = Inventory::default().check(&read_mosaic(io, &file)?);
            let text: String = report.usage.iter().map(|u| format!("{u}\n")).collect();
            let violations = report.violations();
            let stderr: String = violations
                .iter()
                .map(|u| format!("error: too many {} balls: {} > {}\n", u.color.name(), u.used, u.cap))
                .collect();
            Ok(Output {
                code: i32::from(!violations.is_empty()),
                stdout: text,
                stderr,
            })
        }
    }
}
