//! Textual front end: lexer, parser, elaborator, and query evaluation.
