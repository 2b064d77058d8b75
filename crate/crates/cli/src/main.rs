use std::process::ExitCode;

use lame_atlas::config::{parse_args, Format};

fn main() -> ExitCode {
    let cfg = match parse_args(std::env::args_os()) {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    match lame_atlas::run(&cfg) {
        Ok(r) => {
            match cfg.format {
                Format::Text => print!("{}", r.to_text()),
                Format::Json => println!("{}", r.to_json()),
            }
            ExitCode::from(r.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
