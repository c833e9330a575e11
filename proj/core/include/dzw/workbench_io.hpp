// Copyright 2026 The dzw Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "dzw/orbit_model.hpp"
#include "dzw/symbolic_dynamics.hpp"
#include "dzw/torsion.hpp"

namespace dzw {

// JSON interchange for orbit catalogs, Laplacian spectra and SFT systems.
// Text parsers report SchemaError with a field path (and line:column for
// malformed JSON); model invariants surface as the model's own errors.
// The dump functions are canonical: dump(parse(dump(x))) == dump(x).

OrbitCatalog parse_orbit_catalog(std::string_view text);
std::string dump_orbit_catalog(const OrbitCatalog& catalog);

LaplacianSpectra parse_spectra(std::string_view text);
std::string dump_spectra(const LaplacianSpectra& spectra);

SftSystem parse_sft(std::string_view text);
std::string dump_sft(const SftSystem& sys);

OrbitCatalog load_orbit_catalog(const std::filesystem::path& path);
void save_orbit_catalog(const OrbitCatalog& catalog, const std::filesystem::path& path);

LaplacianSpectra load_spectra(const std::filesystem::path& path);
void save_spectra(const LaplacianSpectra& spectra, const std::filesystem::path& path);

SftSystem load_sft(const std::filesystem::path& path);
void save_sft(const SftSystem& sys, const std::filesystem::path& path);

}  // namespace dzw
