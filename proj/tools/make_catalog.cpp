// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

// Regenerates the shipped data files: <dir>/catalog.json plus one plane file per entry.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "spinhol/json_io.hpp"

namespace {

bool write(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return false;
  }
  out << text;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_catalog <output-dir>\n";
    return 2;
  }
  const std::filesystem::path dir(argv[1]);
  const auto entries = spinhol::catalog();
  bool ok = write(dir / "catalog.json", spinhol::dump(spinhol::catalog_to_json(entries)));
  for (const auto& e : entries) {
    const spinhol::PlaneFile f{e.s.twice_s, e.kets, e.name};
    ok = write(dir / (e.name + ".json"), spinhol::dump(spinhol::plane_file_to_json(f))) && ok;
  }
  return ok ? 0 : 3;
}
