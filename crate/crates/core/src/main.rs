use clap::Parser;

fn main() {
    // Die quietly when stdout closes early (`sgcert contract ... | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = sgcert::cli::Cli::parse();
    std::process::exit(sgcert::cli::run(cli));
}
