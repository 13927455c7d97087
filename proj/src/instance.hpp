// Copyright 2026 The ixs Authors
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

#include <memory>
#include <string>
#include <variant>

#include "bcp.hpp"
#include "bkp.hpp"
#include "msmp.hpp"

namespace ixs {

enum class Family { bkp, bcp, msmp };

Family family_from_string(const std::string& name);
std::string family_name(Family f);

// One instance of any supported family plus its adapter factory.
struct Instance {
  Family family = Family::bkp;
  std::variant<BkpInstance, BcpInstance, MsmpInstance> data;

  static Instance parse(Family family, const std::string& text);
  static Instance load(Family family, const std::string& path);
  std::string to_text() const;

  std::unique_ptr<ProblemAdapter> make_adapter() const;
};

}  // namespace ixs
