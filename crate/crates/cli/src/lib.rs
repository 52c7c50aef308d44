//! Placeholder; the CLI grows with the library.

pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run(_args: &[&str]) -> Outcome {
    Outcome {
        stdout: String::new(),
        stderr: "not yet implemented\n".to_string(),
        code: 2,
    }
}
