mod count;
mod hooks;
mod phi;
mod table;
mod verify;

pub use count::count;
pub use hooks::hooks;
pub use phi::phi;
pub use table::table;
pub use verify::verify;

/// What a command prints, and whether it counts as success.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub ok: bool,
}

impl Output {
    pub fn ok(text: String) -> Self {
        Output { text, ok: true }
    }
}

fn json_line(value: &serde_json::Value) -> String {
    format!("{value}\n")
}
