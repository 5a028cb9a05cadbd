#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gf2.hpp"
#include "steiner.hpp"

namespace perfembed {

/// Parsed seed-code file: first data line "m=<int>", then one m-bit string
/// per line. Blank lines are skipped and '#' starts a comment.
struct CodeFile {
  std::uint32_t m = 0;
  std::vector<Word> words;
};

CodeFile parse_code_text(std::istream& in, const std::string& origin);
CodeFile read_code_file(const std::string& path);

/// Parsed triple file: first data line "v=<int>", then one triple per line
/// as three ascending space-separated 1-based point labels. Blank lines
/// and '#' comments are ignored.
TripleSystem parse_triples_text(std::istream& in, const std::string& origin);
TripleSystem read_triples_file(const std::string& path);

void write_triples(std::ostream& out, const TripleSystem& ts,
                   const std::vector<std::string>& comments);
void write_triples_file(const std::string& path, const TripleSystem& ts,
                        const std::vector<std::string>& comments);

/// One bitstring per line (a codeword dump); same blank/comment rules.
std::vector<Word> parse_word_lines(std::istream& in, const std::string& origin);

}  // namespace perfembed
