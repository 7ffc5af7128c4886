//! Command-line surface. Placeholder while the library grows; the real
//! subcommands are wired in once the harness exists.

pub fn main() -> i32 {
    eprintln!("cli not yet wired");
    2
}
