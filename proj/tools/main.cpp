#include <wtensor/cli.hpp>

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> args(argv + 1, argv + argc);
  const int code = wtensor::run_cli(args, std::cout, std::cerr);
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  // Timing goes to stderr only so stdout stays byte-deterministic.
  std::cerr << "elapsed_ms=" << elapsed.count() << "\n";
  return code;
}
