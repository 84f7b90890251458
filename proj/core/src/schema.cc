// Copyright 2026 The TANL Codec Authors.
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


#include "tanl/schema.h"

#include <algorithm>
#include <charconv>
#include <set>

#include "tanl/grammar.h"
#include "unicode.h"

namespace anl {
namespace {

constexpr std::pair<EncoderMode, std::string_view> kModeNames[] = {
    {EncoderMode::kNatural, "natural"},
    {EncoderMode::kNumeric, "numeric"},
    {EncoderMode::kAbridged, "abridged"},
};

constexpr LabelCategory kCategories[] = {
    LabelCategory::kEntity, LabelCategory::kRelation, LabelCategory::kRole,
    LabelCategory::kTrigger};

std::string_view category_name(LabelCategory category) {
  switch (category) {
    case LabelCategory::kEntity:
      return "entity type";
    case LabelCategory::kRelation:
      return "relation type";
    case LabelCategory::kRole:
      return "role";
    case LabelCategory::kTrigger:
      return "trigger type";
  }
  return "label";
}

}  // namespace

std::string_view mode_name(EncoderMode mode) {
  for (const auto &[m, name] : kModeNames) {
    if (m == mode) return name;
  }
  return "unknown";
}

std::optional<EncoderMode> parse_mode_name(std::string_view name) {
  for (const auto &[m, n] : kModeNames) {
    if (n == name) return m;
  }
  return std::nullopt;
}

const std::vector<std::string> &TaskSchema::labels(LabelCategory category) const {
  switch (category) {
    case LabelCategory::kEntity:
      return entity_types_;
    case LabelCategory::kRelation:
      return relation_types_;
    case LabelCategory::kRole:
      return roles_;
    case LabelCategory::kTrigger:
      return trigger_types_;
  }
  return entity_types_;
}

TaskSchema &TaskSchema::set_labels(LabelCategory category,
                                   std::vector<std::string> labels) {
  const_cast<std::vector<std::string> &>(this->labels(category)) =
      std::move(labels);
  return *this;
}

TaskSchema &TaskSchema::set_slots(std::vector<std::string> slots) {
  slots_ = std::move(slots);
  return *this;
}

TaskSchema &TaskSchema::map_label(const std::string &label,
                                  const std::string &natural) {
  auto it = to_natural_.find(label);
  if (it != to_natural_.end()) {
    auto back = from_natural_.find(it->second);
    if (back != from_natural_.end() && back->second == label) {
      from_natural_.erase(back);
    }
  }
  to_natural_[label] = natural;
  from_natural_[natural] = label;
  return *this;
}

bool TaskSchema::has_label(LabelCategory category, std::string_view label) const {
  const auto &l = labels(category);
  return std::find(l.begin(), l.end(), label) != l.end();
}

bool TaskSchema::has_slot(std::string_view slot) const {
  return std::find(slots_.begin(), slots_.end(), slot) != slots_.end();
}

std::string TaskSchema::natural(std::string_view label) const {
  auto it = to_natural_.find(std::string(label));
  return it == to_natural_.end() ? std::string(label) : it->second;
}

std::string TaskSchema::surface(LabelCategory category, std::string_view label,
                                EncoderMode mode) const {
  if (mode == EncoderMode::kNumeric) {
    const auto &l = labels(category);
    auto it = std::find(l.begin(), l.end(), label);
    if (it != l.end()) return std::to_string(it - l.begin() + 1);
  }
  return natural(label);
}

std::optional<std::string> TaskSchema::resolve(LabelCategory category,
                                               std::string_view text,
                                               EncoderMode mode) const {
  const auto &l = labels(category);
  if (mode == EncoderMode::kNumeric) {
    size_t index = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), index);
    if (ec != std::errc() || ptr != text.data() + text.size() || index == 0 ||
        index > l.size()) {
      return std::nullopt;
    }
    return l[index - 1];
  }
  std::string label(text);
  auto it = from_natural_.find(label);
  if (it != from_natural_.end()) label = it->second;
  if (has_label(category, label) && natural(label) == text) return label;
  return std::nullopt;
}

std::vector<std::string> TaskSchema::violations() const {
  std::vector<std::string> out;
  std::map<std::string, std::string> inverse;
  for (const auto &[label, nat] : to_natural_) {
    auto [it, inserted] = inverse.emplace(nat, label);
    if (!inserted) {
      out.push_back("labels '" + it->second + "' and '" + label +
                    "' share the natural label '" + nat + "'");
    }
  }
  auto check_text = [&](const std::string &what, const std::string &text) {
    auto words = unicode::split_whitespace(text);
    if (words.empty()) {
      out.push_back(what + " is empty");
      return;
    }
    for (std::string_view w : words) {
      if (is_structural_token(w)) {
        out.push_back(what + " '" + text + "' contains the special token '" +
                      std::string(w) + "'");
      }
    }
  };
  for (LabelCategory category : kCategories) {
    std::set<std::string> seen_labels;
    std::set<std::string> seen_natural;
    for (const std::string &label : labels(category)) {
      const std::string what(category_name(category));
      if (label.empty()) {
        out.push_back("empty " + what);
        continue;
      }
      if (!seen_labels.insert(label).second) {
        out.push_back("duplicate " + what + " '" + label + "'");
      }
      const std::string nat = natural(label);
      check_text(what, nat);
      if (!seen_natural.insert(nat).second) {
        out.push_back("natural " + what + " '" + nat + "' is ambiguous");
      }
      // An unmapped label must not shadow another label's natural form.
      if (!to_natural_.contains(label)) {
        auto it = inverse.find(label);
        if (it != inverse.end() && it->second != label) {
          out.push_back(what + " '" + label + "' collides with the natural "
                        "label of '" + it->second + "'");
        }
      }
    }
  }
  std::set<std::string> seen_slots;
  for (const std::string &slot : slots_) {
    check_text("slot", slot);
    if (!seen_slots.insert(slot).second) {
      out.push_back("duplicate slot '" + slot + "'");
    }
  }
  return out;
}

}  // namespace anl
