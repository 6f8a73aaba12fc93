//! Python bindings for the unplugged toolkit.
//!
//! Everything crosses the boundary as plain text in the same formats the
//! command-line tool reads and writes; errors become `ValueError`.

use std::fmt::Display;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use unplugged::card::{self, CodingCard};
use unplugged::cipher::caesar::{self, CaesarKey, FrequencyTable};
use unplugged::cipher::peg::{self, PegKey};
use unplugged::cipher::pigpen::{self, PigpenTable};
use unplugged::grid::{Color, Inventory};
use unplugged::sim::{self, MachineState};
use unplugged::turtle::{Canvas, TurtleProgram};
use unplugged::worksheet;

fn value_error(e: impl Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_cell(code: Option<&str>) -> PyResult<Option<Color>> {
    let Some(code) = code else { return Ok(None) };
    let mut chars = code.chars();
    match (chars.next(), chars.next()) {
        (Some('.'), None) => Ok(None),
        (Some(c), None) => Color::from_code(c).map(Some).map_err(value_error),
        _ => Err(PyValueError::new_err(format!("expected one color code, got {code:?}"))),
    }
}

/// A bead mosaic. Row 0 is the bottom row.
#[pyclass(name = "Mosaic", eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyMosaic(unplugged::Mosaic);

#[pymethods]
impl PyMosaic {
    #[new]
    fn new(rows: usize, columns: usize) -> PyResult<Self> {
        unplugged::Mosaic::new(rows, columns).map(PyMosaic).map_err(value_error)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        unplugged::Mosaic::parse(text).map(PyMosaic).map_err(value_error)
    }

    fn render(&self) -> String {
        self.0.render()
    }

    #[getter]
    fn rows(&self) -> usize {
        self.0.rows()
    }

    #[getter]
    fn columns(&self) -> usize {
        self.0.columns()
    }

    fn get(&self, row: usize, column: usize) -> PyResult<Option<char>> {
        self.check(row, column)?;
        Ok(self.0.get(row, column).map(Color::code))
    }

    #[pyo3(signature = (row, column, code=None))]
    fn set(&mut self, row: usize, column: usize, code: Option<&str>) -> PyResult<()> {
        self.check(row, column)?;
        self.0.set(row, column, parse_cell(code)?);
        Ok(())
    }

    fn filled_count(&self) -> usize {
        self.0.filled_count()
    }

    fn is_gravity_consistent(&self) -> bool {
        self.0.is_gravity_consistent()
    }

    fn gravity_violations(&self) -> Vec<(usize, usize)> {
        self.0.gravity_violations()
    }

    /// Colors that exceed the default kit, as `"white used=24 cap=16"`.
    fn inventory_violations(&self) -> Vec<String> {
        Inventory::default()
            .check(&self.0)
            .violations()
            .iter()
            .map(ToString::to_string)
            .collect()
    }

    fn __str__(&self) -> String {
        self.0.render()
    }

    fn __repr__(&self) -> String {
        format!("Mosaic(rows={}, columns={})", self.0.rows(), self.0.columns())
    }
}

impl PyMosaic {
    fn check(&self, row: usize, column: usize) -> PyResult<()> {
        if row >= self.0.rows() || column >= self.0.columns() {
            return Err(pyo3::exceptions::PyIndexError::new_err(format!(
                "({row}, {column}) outside {}x{}",
                self.0.rows(),
                self.0.columns()
            )));
        }
        Ok(())
    }
}

#[pyclass(name = "CodingCard", eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyCodingCard(CodingCard);

#[pymethods]
impl PyCodingCard {
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        CodingCard::parse(text).map(PyCodingCard).map_err(value_error)
    }

    #[staticmethod]
    fn encode(mosaic: PyRef<'_, PyMosaic>) -> PyResult<Self> {
        CodingCard::encode(&mosaic.0).map(PyCodingCard).map_err(value_error)
    }

    fn print(&self) -> String {
        self.0.print()
    }

    /// Row-sum violations; empty when the card is valid.
    fn validate(&self) -> Vec<String> {
        self.0
            .validate()
            .violations
            .iter()
            .map(ToString::to_string)
            .collect()
    }

    fn execute(&self) -> PyResult<PyMosaic> {
        self.0.execute().map(PyMosaic).map_err(value_error)
    }

    fn normalize(&self) -> Self {
        PyCodingCard(self.0.normalize())
    }

    fn is_canonical(&self) -> bool {
        self.0.is_canonical()
    }

    fn __str__(&self) -> String {
        self.0.print()
    }
}

/// Cells where `actual` differs from `target`, as `"A1: expected R, got Y"`.
#[pyfunction]
fn diff(target: PyRef<'_, PyMosaic>, actual: PyRef<'_, PyMosaic>) -> PyResult<Vec<String>> {
    let mismatches = card::diff(&target.0, &actual.0).map_err(value_error)?;
    Ok(mismatches.iter().map(ToString::to_string).collect())
}

#[pyclass(name = "TurtleProgram", eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyTurtleProgram(TurtleProgram);

#[pymethods]
impl PyTurtleProgram {
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        TurtleProgram::parse(text).map(PyTurtleProgram).map_err(value_error)
    }

    /// Program that paints the given picture (top row first).
    #[staticmethod]
    fn compile(picture: &str) -> PyResult<Self> {
        let canvas = Canvas::parse(picture).map_err(value_error)?;
        Ok(PyTurtleProgram(TurtleProgram::compile(&canvas)))
    }

    fn print(&self) -> String {
        self.0.print()
    }

    fn compress(&self) -> Self {
        PyTurtleProgram(self.0.compress())
    }

    /// Runs the program; returns the picture and the final `(row, column)`.
    fn interpret(&self, width: usize, height: usize) -> PyResult<(String, (usize, usize))> {
        let painted = self.0.interpret(width, height).map_err(value_error)?;
        Ok((painted.canvas.render(), painted.cursor))
    }

    fn __str__(&self) -> String {
        self.0.print()
    }
}

fn caesar_key(shift: u8) -> PyResult<CaesarKey> {
    CaesarKey::new(shift).map_err(value_error)
}

#[pyfunction]
fn caesar_encrypt(text: &str, shift: u8) -> PyResult<String> {
    Ok(caesar::encrypt(text, caesar_key(shift)?))
}

#[pyfunction]
fn caesar_decrypt(text: &str, shift: u8) -> PyResult<String> {
    Ok(caesar::decrypt(text, caesar_key(shift)?))
}

/// All 26 shifts ranked by chi-squared, best first.
#[pyfunction]
#[pyo3(signature = (text, frequencies=None))]
fn caesar_crack(text: &str, frequencies: Option<&str>) -> PyResult<Vec<(u8, f64)>> {
    let table = match frequencies {
        Some(t) => FrequencyTable::parse(t).map_err(value_error)?,
        None => FrequencyTable::english(),
    };
    let ranking = caesar::crack(text, &table).map_err(value_error)?;
    Ok(ranking.into_iter().map(|(k, score)| (k.shift(), score)).collect())
}

#[pyfunction]
fn pigpen_encode(text: &str) -> PyResult<String> {
    pigpen::encode_message(text, &PigpenTable::classic()).map_err(value_error)
}

#[pyfunction]
fn pigpen_decode(text: &str) -> PyResult<String> {
    pigpen::decode_message(text, &PigpenTable::classic()).map_err(value_error)
}

#[pyclass(name = "PegKey", eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyPegKey(PegKey);

#[pymethods]
impl PyPegKey {
    #[staticmethod]
    fn default() -> Self {
        PyPegKey(PegKey::default_key())
    }

    #[staticmethod]
    fn generate(seed: u64) -> Self {
        PyPegKey(PegKey::generate(seed))
    }

    #[staticmethod]
    fn load(text: &str) -> PyResult<Self> {
        PegKey::load(text).map(PyPegKey).map_err(value_error)
    }

    fn save(&self) -> String {
        self.0.save()
    }

    #[pyo3(signature = (text, backwards=false))]
    fn encrypt(&self, text: &str, backwards: bool) -> PyResult<String> {
        let words = text
            .split_whitespace()
            .map(|w| peg::encrypt(w, &self.0, backwards))
            .collect::<Result<Vec<_>, _>>()
            .map_err(value_error)?;
        Ok(peg::format_message(&words))
    }

    #[pyo3(signature = (text, backwards=false))]
    fn decrypt(&self, text: &str, backwards: bool) -> PyResult<String> {
        let words = peg::parse_message(text).map_err(value_error)?;
        Ok(words
            .iter()
            .map(|w| peg::decrypt(w, &self.0, backwards))
            .collect::<Vec<_>>()
            .join(" "))
    }

    fn __str__(&self) -> String {
        self.0.save()
    }
}

/// The marble machine: twelve columns fed from a queue of balls.
#[pyclass(name = "Machine", eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyMachine(MachineState);

#[pymethods]
impl PyMachine {
    #[new]
    #[pyo3(signature = (feed, rows=sim::DEFAULT_ROWS))]
    fn new(feed: &str, rows: usize) -> PyResult<Self> {
        let feed = sim::parse_feed(feed).map_err(value_error)?;
        MachineState::new(feed, rows).map(PyMachine).map_err(value_error)
    }

    fn launch(&mut self, column: usize) -> PyResult<()> {
        self.0.launch(column).map_err(value_error)
    }

    fn exit(&mut self) -> PyResult<()> {
        self.0.exit_ball().map_err(value_error)
    }

    fn reset(&mut self, column: usize) -> PyResult<()> {
        self.0.reset_column(column).map_err(value_error)
    }

    fn peek(&self) -> PyResult<char> {
        self.0.peek().map(Color::code).map_err(value_error)
    }

    fn height(&self, column: usize) -> usize {
        self.0.height(column)
    }

    /// Remaining feed as a `FEED` line.
    fn feed(&self) -> String {
        sim::format_feed(self.0.feed())
    }

    fn snapshot(&self) -> PyMosaic {
        PyMosaic(self.0.snapshot())
    }

    fn is_conserved(&self) -> bool {
        self.0.is_conserved()
    }

    /// Runs a script from this state without changing it. Returns the final
    /// machine and the colors logged by `PEEK`.
    fn run_script(&self, script: &str) -> PyResult<(PyMachine, String)> {
        let (state, log) = self.0.run_script(script).map_err(value_error)?;
        Ok((PyMachine(state), log.iter().map(|c| c.code()).collect()))
    }
}

/// Script that builds `target` on an empty machine with the given feed.
#[pyfunction]
#[pyo3(signature = (target, feed, rows=sim::DEFAULT_ROWS))]
fn synthesize(target: PyRef<'_, PyMosaic>, feed: &str, rows: usize) -> PyResult<String> {
    let feed = sim::parse_feed(feed).map_err(value_error)?;
    let script = sim::synthesize_script(&target.0, &feed, rows).map_err(value_error)?;
    Ok(sim::format_script(&script))
}

#[pyfunction]
#[pyo3(signature = (seed, rows, columns, full=false))]
fn random_mosaic(seed: u64, rows: usize, columns: usize, full: bool) -> PyResult<PyMosaic> {
    worksheet::random_mosaic(seed, rows, columns, full)
        .map(PyMosaic)
        .map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (mosaic, answers=false))]
fn card_worksheet(mosaic: PyRef<'_, PyMosaic>, answers: bool) -> PyResult<String> {
    let sheet = worksheet::cards(&mosaic.0).map_err(value_error)?;
    Ok(sheet.render(answers))
}

#[pyfunction]
#[pyo3(signature = (words, key, backwards=false, answers=false))]
fn cipher_worksheet(
    words: Vec<String>,
    key: PyRef<'_, PyPegKey>,
    backwards: bool,
    answers: bool,
) -> PyResult<String> {
    let words: Vec<&str> = words.iter().map(String::as_str).collect();
    let sheet = worksheet::cipher(&words, &key.0, backwards).map_err(value_error)?;
    Ok(sheet.render(answers))
}

#[pymodule]
#[pyo3(name = "unplugged")]
fn unplugged_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMosaic>()?;
    m.add_class::<PyCodingCard>()?;
    m.add_class::<PyTurtleProgram>()?;
    m.add_class::<PyPegKey>()?;
    m.add_class::<PyMachine>()?;
    m.add_function(wrap_pyfunction!(diff, m)?)?;
    m.add_function(wrap_pyfunction!(caesar_encrypt, m)?)?;
    m.add_function(wrap_pyfunction!(caesar_decrypt, m)?)?;
    m.add_function(wrap_pyfunction!(caesar_crack, m)?)?;
    m.add_function(wrap_pyfunction!(pigpen_encode, m)?)?;
    m.add_function(wrap_pyfunction!(pigpen_decode, m)?)?;
    m.add_function(wrap_pyfunction!(synthesize, m)?)?;
    m.add_function(wrap_pyfunction!(random_mosaic, m)?)?;
    m.add_function(wrap_pyfunction!(card_worksheet, m)?)?;
    m.add_function(wrap_pyfunction!(cipher_worksheet, m)?)?;
    Ok(())
}
