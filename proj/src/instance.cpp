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

#include "instance.hpp"

#include "util.hpp"

namespace ixs {

Family family_from_string(const std::string& name) {
  if (name == "bkp") return Family::bkp;
  if (name == "bcp") return Family::bcp;
  if (name == "msmp") return Family::msmp;
  fail(ErrorKind::invalid_argument, "unknown family: " + name);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::bkp: return "bkp";
    case Family::bcp: return "bcp";
    case Family::msmp: return "msmp";
  }
  fail(ErrorKind::internal, "bad family enum");
}

Instance Instance::parse(Family family, const std::string& text) {
  Instance inst;
  inst.family = family;
  switch (family) {
    case Family::bkp: inst.data = BkpInstance::parse(text); break;
    case Family::bcp: inst.data = BcpInstance::parse(text); break;
    case Family::msmp: inst.data = MsmpInstance::parse(text); break;
  }
  return inst;
}

Instance Instance::load(Family family, const std::string& path) {
  return parse(family, read_text_file(path));
}

std::string Instance::to_text() const {
  return std::visit([](const auto& d) { return d.to_text(); }, data);
}

std::unique_ptr<ProblemAdapter> Instance::make_adapter() const {
  switch (family) {
    case Family::bkp:
      return std::make_unique<BkpAdapter>(std::get<BkpInstance>(data));
    case Family::bcp:
      return std::make_unique<BcpAdapter>(std::get<BcpInstance>(data));
    case Family::msmp:
      return std::make_unique<MsmpAdapter>(std::get<MsmpInstance>(data));
  }
  fail(ErrorKind::internal, "bad family enum");
}

}  // namespace ixs
