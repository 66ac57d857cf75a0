#include "tol/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace tol::io {

namespace {

struct LineScanner {
  std::string_view text;
  size_t pos = 0;
  int line_no = 0;

  // Next content line with comments stripped, or nullopt at end.
  std::optional<std::string> next() {
    while (pos < text.size()) {
      size_t eol = text.find('\n', pos);
      if (eol == std::string_view::npos) eol = text.size();
      std::string line(text.substr(pos, eol - pos));
      pos = eol + 1;
      ++line_no;
      if (const size_t hash = line.find('#'); hash != std::string::npos)
        line.erase(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
    }
    return std::nullopt;
  }
};

std::vector<long long> parse_ints(const std::string& line, int line_no) {
  std::istringstream in(line);
  std::vector<long long> out;
  long long v;
  while (in >> v) out.push_back(v);
  std::string rest;
  if (in.clear(), in >> rest)
    throw ParseError("unexpected token '" + rest + "'", line_no);
  return out;
}

int parse_header(LineScanner& scan, std::string_view what) {
  auto line = scan.next();
  if (!line) throw ParseError("empty " + std::string(what) + " input", scan.line_no);
  std::istringstream in(*line);
  std::string tag;
  long long n = 0;
  if (!(in >> tag >> n) || tag != "n")
    throw ParseError("expected header 'n <int>'", scan.line_no);
  if (n < 1 || n > 1000) throw ParseError("unreasonable ground set size", scan.line_no);
  return static_cast<int>(n);
}

}  // namespace

TernaryRelation parse_relation_text(std::string_view text) {
  LineScanner scan{text};
  const int n = parse_header(scan, "relation");
  RelationBuilder builder(n);
  while (auto line = scan.next()) {
    const auto ints = parse_ints(*line, scan.line_no);
    if (ints.size() != 3)
      throw ParseError("expected three integers, got " + std::to_string(ints.size()),
                       scan.line_no);
    try {
      builder.add({static_cast<Point>(ints[0]), static_cast<Point>(ints[1]),
                   static_cast<Point>(ints[2])});
    } catch (const DomainError& e) {
      throw ParseError(e.what(), scan.line_no);
    }
  }
  return std::move(builder).build();
}

std::string relation_to_text(const TernaryRelation& rel) {
  std::ostringstream out;
  out << "n " << rel.n() << "\n";
  for (Triple t : rel.members()) out << t.a << " " << t.b << " " << t.c << "\n";
  return out.str();
}

TernaryRelation parse_relation_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("triples"))
    throw ParseError("relation JSON needs keys \"n\" and \"triples\"");
  const int n = j.at("n").get<int>();
  RelationBuilder builder(n);
  for (const auto& item : j.at("triples")) {
    if (!item.is_array() || item.size() != 3)
      throw ParseError("each triple must be an array of three integers");
    builder.add({item[0].get<Point>(), item[1].get<Point>(), item[2].get<Point>()});
  }
  return std::move(builder).build();
}

nlohmann::json relation_to_json(const TernaryRelation& rel) {
  nlohmann::json triples = nlohmann::json::array();
  for (Triple t : rel.members()) triples.push_back({t.a, t.b, t.c});
  return {{"n", rel.n()}, {"triples", triples}};
}

TernaryRelation parse_relation(std::string_view text) {
  const size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON");
    return parse_relation_json(j);
  }
  return parse_relation_text(text);
}

TernaryRelation read_relation_file(const std::string& path) {
  return parse_relation(read_file(path));
}

Digraph parse_digraph_text(std::string_view text) {
  LineScanner scan{text};
  const int n = parse_header(scan, "digraph");
  Digraph g(n);
  while (auto line = scan.next()) {
    const auto ints = parse_ints(*line, scan.line_no);
    if (ints.size() != 2)
      throw ParseError("expected two integers, got " + std::to_string(ints.size()),
                       scan.line_no);
    try {
      g.add_arc(static_cast<int>(ints[0]), static_cast<int>(ints[1]));
    } catch (const DomainError& e) {
      throw ParseError(e.what(), scan.line_no);
    }
  }
  return g;
}

std::string digraph_to_text(const Digraph& g) {
  std::ostringstream out;
  out << "n " << g.n() << "\n";
  for (const auto& [u, v] : g.arcs()) out << u << " " << v << "\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace tol::io
