pub mod front_trace;
pub mod oracle;
