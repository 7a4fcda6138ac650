#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "thetap/jsonio.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Exact parameter calculus for real symplectic/even-orthogonal groups:\n"
      "strong real forms, Langlands-Vogan <-> Harish-Chandra translation and\n"
      "theta lifts, driven by JSON-lines requests on stdin (one document per\n"
      "line, one response per line)."};

  std::string file;
  thetap::CliOptions opt;
  app.add_option("--file", file, "read requests from a file instead of stdin");
  app.add_option("--max-rank", opt.max_rank,
                 "enumeration guard for Weyl-group scans")
      ->default_val(8);
  CLI11_PARSE(app, argc, argv);

  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "cannot open " << file << "\n";
      return 2;
    }
    return thetap::run_stream(in, std::cout, opt);
  }
  return thetap::run_stream(std::cin, std::cout, opt);
}
