#include "femtonc/scenario_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "femtonc/error.hpp"

namespace femtonc {

namespace {

template <class T>
T parse_number(const std::string& tok, int line, const char* what)
{
  T v{};
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
  return v;
}

std::vector<int> parse_list(const std::string& text, int line)
{
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(parse_number<int>(item, line, "file index"));
  return out;
}

// Splits `key=value`; throws unless the key matches.
std::string keyed(const std::string& tok, const std::string& key, int line)
{
  auto eq = tok.find('=');
  if (eq == std::string::npos || tok.substr(0, eq) != key)
    throw ParseError(line, "expected " + key + "=..., got '" + tok + "'");
  return tok.substr(eq + 1);
}

std::string num(double v)
{
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

std::string join(const std::vector<int>& v)
{
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

struct RawClient {
  int line;
  int id;
  Point pos;
  int wants;
  std::vector<int> has;
};

struct RawFc {
  int line;
  int id;
  Point pos;
  double radius;
  std::vector<int> cache;
};

}  // namespace

Scenario parse_scenario(std::istream& in)
{
  Scenario s;
  bool have_files = false, have_mbs = false;
  std::vector<RawClient> clients;
  std::vector<RawFc> fcs;

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    const std::string& kind = tok[0];
    if (kind == "files") {
      if (tok.size() != 2) throw ParseError(line, "usage: files <F>");
      s.num_files = parse_number<int>(tok[1], line, "file count");
      have_files = true;
    } else if (kind == "mbs_radius") {
      if (tok.size() != 2) throw ParseError(line, "usage: mbs_radius <r>");
      s.mbs_radius = parse_number<double>(tok[1], line, "radius");
      have_mbs = true;
    } else if (kind == "seed") {
      if (tok.size() != 2) throw ParseError(line, "usage: seed <n>");
      s.seed = parse_number<std::uint64_t>(tok[1], line, "seed");
    } else if (kind == "fc") {
      if (tok.size() != 6) throw ParseError(line, "usage: fc <id> <x> <y> r=<radius> cache=<list>");
      fcs.push_back({line, parse_number<int>(tok[1], line, "fc id"),
                     {parse_number<double>(tok[2], line, "x"), parse_number<double>(tok[3], line, "y")},
                     parse_number<double>(keyed(tok[4], "r", line), line, "radius"),
                     parse_list(keyed(tok[5], "cache", line), line)});
    } else if (kind == "client") {
      if (tok.size() != 6)
        throw ParseError(line, "usage: client <id> <x> <y> wants=<k> has=<list>");
      clients.push_back({line, parse_number<int>(tok[1], line, "client id"),
                         {parse_number<double>(tok[2], line, "x"), parse_number<double>(tok[3], line, "y")},
                         parse_number<int>(keyed(tok[4], "wants", line), line, "file index"),
                         parse_list(keyed(tok[5], "has", line), line)});
    } else {
      throw ParseError(line, "unknown record '" + kind + "'");
    }
  }
  if (!have_files) throw ParseError(line, "missing 'files' record");
  if (!have_mbs) throw ParseError(line, "missing 'mbs_radius' record");

  std::sort(fcs.begin(), fcs.end(), [](auto& a, auto& b) { return a.id < b.id; });
  std::sort(clients.begin(), clients.end(), [](auto& a, auto& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < fcs.size(); ++i) {
    const RawFc& r = fcs[i];
    if (r.id != static_cast<int>(i)) throw ParseError(r.line, "fc ids must be 0..C-1 without gaps");
    try {
      s.fcs.push_back({r.id, r.pos, r.radius, FileSet(s.num_files, r.cache)});
    } catch (const InvalidInput& e) {
      throw ParseError(r.line, e.what());
    }
  }
  for (std::size_t j = 0; j < clients.size(); ++j) {
    const RawClient& r = clients[j];
    if (r.id != static_cast<int>(j))
      throw ParseError(r.line, "client ids must be 0..U-1 without gaps");
    try {
      Client c{r.id, r.pos, FileSet(s.num_files, r.has), r.wants};
      if (c.wants < 0 || c.wants >= s.num_files) throw InvalidInput("wanted file outside library");
      if (c.has.contains(c.wants)) throw InvalidInput("wanted file is in the has set");
      if (distance(c.position, {}) > s.mbs_radius) throw InvalidInput("client outside the macrocell");
      s.clients.push_back(std::move(c));
    } catch (const InvalidInput& e) {
      throw ParseError(r.line, e.what());
    }
  }
  validate_scenario(s);
  return s;
}

Scenario parse_scenario_string(const std::string& text)
{
  std::istringstream in(text);
  return parse_scenario(in);
}

Scenario load_scenario(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open scenario file " + path);
  return parse_scenario(in);
}

void write_scenario(std::ostream& out, const Scenario& s)
{
  out << "files " << s.num_files << "\n";
  out << "mbs_radius " << num(s.mbs_radius) << "\n";
  out << "seed " << s.seed << "\n";
  for (const Femtocache& fc : s.fcs)
    out << "fc " << fc.id << ' ' << num(fc.position.x) << ' ' << num(fc.position.y)
        << " r=" << num(fc.radius) << " cache=" << join(fc.cache.to_vector()) << "\n";
  for (const Client& c : s.clients)
    out << "client " << c.id << ' ' << num(c.position.x) << ' ' << num(c.position.y)
        << " wants=" << c.wants << " has=" << join(c.has.to_vector()) << "\n";
}

std::string format_scenario(const Scenario& s)
{
  std::ostringstream out;
  write_scenario(out, s);
  return out.str();
}

}  // namespace femtonc
