#pragma once

// Golden-file corpus for the command line tool. Each line of commands.txt
// reads "<name> <arguments...>"; <name>.out holds the combined output of
// the command followed by an "[exit N]" line. Commands run from the corpus
// directory so relative input files resolve.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace golden {

struct Command {
  std::string name;
  std::string args;
};

struct Result {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline std::vector<Command> load(const std::filesystem::path& dir) {
  std::ifstream in(dir / "commands.txt");
  std::vector<Command> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto space = line.find(' ');
    out.push_back({line.substr(0, space), space == std::string::npos ? "" : line.substr(space + 1)});
  }
  return out;
}

inline std::string run(const std::string& cli, const std::filesystem::path& dir, const std::string& args) {
  std::string cmd = "cd '" + dir.string() + "' && '" + cli + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return "[popen failed]\n";
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out + "[exit " + std::to_string(code) + "]\n";
}

inline std::string slurp(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Runs every command; with `regenerate` set, rewrites the expected files.
inline std::vector<Result> check_all(const std::string& cli, const std::filesystem::path& dir, bool regenerate) {
  std::vector<Result> results;
  for (const Command& c : load(dir)) {
    std::string got = run(cli, dir, c.args);
    std::filesystem::path expected = dir / (c.name + ".out");
    if (regenerate) {
      std::ofstream(expected, std::ios::binary) << got;
      results.push_back({c.name, true, "regenerated"});
      continue;
    }
    if (!std::filesystem::exists(expected)) {
      results.push_back({c.name, false, "missing " + expected.string()});
      continue;
    }
    std::string want = slurp(expected);
    if (got == want) {
      results.push_back({c.name, true, ""});
    } else {
      std::size_t at = 0;
      while (at < got.size() && at < want.size() && got[at] == want[at]) ++at;
      results.push_back({c.name, false, "first difference at byte " + std::to_string(at)});
    }
  }
  return results;
}

}  // namespace golden
