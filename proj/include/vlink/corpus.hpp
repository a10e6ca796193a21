#pragma once

#include <string_view>
#include <vector>

namespace vlink {

struct Fixture {
    std::string_view name;
    std::string_view code;
    std::string_view note;
};

const std::vector<Fixture>& corpus();
const Fixture* corpus_find(std::string_view name);  // nullptr if absent

}  // namespace vlink
