#include "golden.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fusion/cli.hpp"

namespace golden {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::vector<Case> load_cases(const std::string& dir) {
  std::istringstream in(slurp(dir + "/cases.txt"));
  std::vector<Case> cases;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    const auto a = line.find('|');
    const auto b = line.find('|', a + 1);
    if (a == std::string::npos || b == std::string::npos) throw std::runtime_error("bad case line: " + line);
    Case c;
    c.name = trim(line.substr(0, a));
    c.exit_code = std::stoi(trim(line.substr(a + 1, b - a - 1)));
    std::istringstream words(line.substr(b + 1));
    for (std::string w; words >> w;) c.args.push_back(w);
    cases.push_back(std::move(c));
  }
  return cases;
}

std::string render(const Case& c, int* exit_code) {
  std::ostringstream out, err;
  *exit_code = fusion::cli::run(c.args, out, err);
  return out.str();
}

Outcome check(const Case& c, const std::string& dir) {
  Outcome o{c.name, false, ""};
  int code = 0;
  const std::string got = render(c, &code);
  if (code != c.exit_code) {
    o.detail = "exit " + std::to_string(code) + ", expected " + std::to_string(c.exit_code);
    return o;
  }
  const std::string want = slurp(dir + "/" + c.name + ".out");
  if (got != want) {
    o.detail = "output differs:\n" + got;
    return o;
  }
  if (!got.empty() && got[0] == '{') {
    const auto doc = nlohmann::ordered_json::parse(got);
    if (doc.dump(2) + "\n" != got) {
      o.detail = "JSON round trip is not byte-identical";
      return o;
    }
    for (const char* key : {"command", "inputs", "result"}) {
      if (!doc.contains(key)) {
        o.detail = std::string("JSON lacks '") + key + "'";
        return o;
      }
    }
  }
  o.ok = true;
  return o;
}

}  // namespace golden
