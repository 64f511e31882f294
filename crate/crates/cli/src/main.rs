use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    match spinorgraph::run(std::env::args_os()) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err((message, code)) => {
            eprint!("{message}");
            ExitCode::from(code as u8)
        }
    }
}
