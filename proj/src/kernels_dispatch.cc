// Copyright 2026 The hsdual Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "hsdual/kernels.h"

namespace hsdual::kernels {

namespace {

constexpr KernelTable kScalarTable{Isa::Scalar, &scalar::dotc, &scalar::axpy};
#if HSDUAL_HAVE_AVX2_KERNELS
constexpr KernelTable kAvx2Table{Isa::Avx2, &avx2::dotc, &avx2::axpy};
#endif
#if HSDUAL_HAVE_NEON_KERNELS
constexpr KernelTable kNeonTable{Isa::Neon, &neon::dotc, &neon::axpy};
#endif

bool cpu_supports(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
#if HSDUAL_HAVE_AVX2_KERNELS && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Isa::Neon:
#if HSDUAL_HAVE_NEON_KERNELS
            return true;  // mandatory on aarch64
#else
            return false;
#endif
    }
    return false;
}

const KernelTable &pick_active() {
    const char *forced = std::getenv("HSDUAL_KERNELS");
    if (forced != nullptr && *forced != '\0') {
        const std::string name(forced);
        for (Isa isa : available_isas()) {
            if (isa_name(isa) == name) {
                return table_for(isa);
            }
        }
        // Unknown or unsupported request: fall back to the reference path.
        return kScalarTable;
    }
    return table_for(available_isas().back());
}

}  // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return "scalar";
        case Isa::Avx2:
            return "avx2";
        case Isa::Neon:
            return "neon";
    }
    return "unknown";
}

std::vector<Isa> available_isas() {
    std::vector<Isa> out{Isa::Scalar};
    for (Isa isa : {Isa::Avx2, Isa::Neon}) {
        if (cpu_supports(isa)) {
            out.push_back(isa);
        }
    }
    return out;
}

const KernelTable &table_for(Isa isa) {
    if (!cpu_supports(isa)) {
        throw std::invalid_argument("kernel ISA not available: " + std::string(isa_name(isa)));
    }
    switch (isa) {
#if HSDUAL_HAVE_AVX2_KERNELS
        case Isa::Avx2:
            return kAvx2Table;
#endif
#if HSDUAL_HAVE_NEON_KERNELS
        case Isa::Neon:
            return kNeonTable;
#endif
        default:
            return kScalarTable;
    }
}

const KernelTable &active() {
    static const KernelTable &table = pick_active();
    return table;
}

}  // namespace hsdual::kernels
