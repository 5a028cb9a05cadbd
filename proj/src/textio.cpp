#include "textio.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace perfembed {

namespace {

std::string_view strip(std::string_view s) {
  const auto hash = s.find('#');
  if (hash != std::string_view::npos) s = s.substr(0, hash);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(const std::string& origin, std::size_t lineno,
                       const std::string& msg) {
  std::ostringstream os;
  os << origin << ":" << lineno << ": " << msg;
  throw InvalidInput(os.str());
}

std::uint32_t parse_header_int(std::string_view line, char key,
                               const std::string& origin, std::size_t lineno) {
  if (line.size() < 3 || line[0] != key || line[1] != '=')
    fail(origin, lineno,
         std::string("expected \"") + key + "=<int>\", got \"" +
             std::string(line) + "\"");
  std::uint32_t value = 0;
  const auto* first = line.data() + 2;
  const auto* last = line.data() + line.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    fail(origin, lineno, "bad integer in \"" + std::string(line) + "\"");
  return value;
}

// Applies fn(stripped_line, lineno) to every non-empty data line.
template <class F>
void for_each_data_line(std::istream& in, F fn) {
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string_view line = strip(raw);
    if (line.empty()) continue;
    fn(line, lineno);
  }
}

}  // namespace

CodeFile parse_code_text(std::istream& in, const std::string& origin) {
  CodeFile out;
  bool have_header = false;
  for_each_data_line(in, [&](std::string_view line, std::size_t lineno) {
    if (!have_header) {
      out.m = parse_header_int(line, 'm', origin, lineno);
      have_header = true;
      return;
    }
    Word w;
    try {
      w = Word::parse(line);
    } catch (const InvalidInput& e) {
      fail(origin, lineno, e.what());
    }
    if (w.size() != out.m) {
      std::ostringstream os;
      os << "word \"" << line << "\" has length " << w.size() << ", expected m="
         << out.m;
      fail(origin, lineno, os.str());
    }
    out.words.push_back(std::move(w));
  });
  if (!have_header) throw InvalidInput(origin + ": missing \"m=<int>\" header");
  if (out.words.empty()) throw InvalidInput(origin + ": no codewords listed");
  return out;
}

CodeFile read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open code file: " + path);
  return parse_code_text(in, path);
}

TripleSystem parse_triples_text(std::istream& in, const std::string& origin) {
  TripleSystem ts;
  bool have_header = false;
  for_each_data_line(in, [&](std::string_view line, std::size_t lineno) {
    if (!have_header) {
      ts.v = parse_header_int(line, 'v', origin, lineno);
      have_header = true;
      return;
    }
    std::istringstream fields{std::string(line)};
    std::uint32_t a = 0, b = 0, c = 0;
    std::string extra;
    if (!(fields >> a >> b >> c) || (fields >> extra))
      fail(origin, lineno,
           "expected three space-separated points, got \"" + std::string(line) +
               "\"");
    if (!(a >= 1 && a < b && b < c && c <= ts.v)) {
      std::ostringstream os;
      os << "triple " << a << " " << b << " " << c
         << " is not strictly ascending within 1..v=" << ts.v;
      fail(origin, lineno, os.str());
    }
    ts.triples.push_back({a, b, c});
  });
  if (!have_header) throw InvalidInput(origin + ": missing \"v=<int>\" header");
  return ts;
}

TripleSystem read_triples_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open triple file: " + path);
  return parse_triples_text(in, path);
}

void write_triples(std::ostream& out, const TripleSystem& ts,
                   const std::vector<std::string>& comments) {
  for (const std::string& c : comments) out << "# " << c << "\n";
  out << "v=" << ts.v << "\n";
  for (const auto& t : ts.triples) out << t[0] << " " << t[1] << " " << t[2] << "\n";
}

void write_triples_file(const std::string& path, const TripleSystem& ts,
                        const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open output file: " + path);
  write_triples(out, ts, comments);
  out.flush();
  if (!out) throw IoError("failed writing triple file: " + path);
}

std::vector<Word> parse_word_lines(std::istream& in, const std::string& origin) {
  std::vector<Word> words;
  for_each_data_line(in, [&](std::string_view line, std::size_t lineno) {
    try {
      words.push_back(Word::parse(line));
    } catch (const InvalidInput& e) {
      fail(origin, lineno, e.what());
    }
  });
  return words;
}

}  // namespace perfembed
