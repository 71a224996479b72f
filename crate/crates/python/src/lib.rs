use pyo3::prelude::*;

#[pymodule]
fn mocd(_m: &Bound<'_, PyModule>) -> PyResult<()> {
    Ok(())
}
