#pragma once

// Subprocess harness for binaries under test: runs a command line through
// the shell with redirected streams and hands back exit code and output.
// CHROMA_CLI_PATH and CHROMA_GOLDEN_DIR come in as compile definitions.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace cli_harness {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline RunResult run_cli(const std::string& args, const std::string& stdin_text = "",
                         const std::string& env_prefix = "") {
  static int sequence = 0;
  const std::string tag = std::to_string(++sequence);
  const std::string in_path = "cli_in_" + tag + ".txt";
  const std::string out_path = "cli_out_" + tag + ".txt";
  const std::string err_path = "cli_err_" + tag + ".txt";
  {
    std::ofstream in(in_path, std::ios::binary);
    in << stdin_text;
  }
  const std::string command = env_prefix + "\"" + CHROMA_CLI_PATH + "\" " + args + " < " +
                              in_path + " > " + out_path + " 2> " + err_path;
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::remove(in_path.c_str());
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

inline std::string golden(const std::string& name) {
  return slurp(std::string(CHROMA_GOLDEN_DIR) + "/" + name);
}

}  // namespace cli_harness
