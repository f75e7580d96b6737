#ifndef mdweave_labels_hpp
#define mdweave_labels_hpp

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace mdweave {

// Opaque non-empty text identifier. Object, class and reference labels are
// distinct types so they cannot be mixed up in signatures.
template <typename Tag>
class Label {
public:
    explicit Label(std::string text) : text_(std::move(text)) {
        if (text_.empty()) {
            throw std::invalid_argument("label must be non-empty");
        }
    }

    const std::string& text() const { return text_; }

    auto operator<=>(const Label&) const = default;

private:
    std::string text_;
};

using ObjectLabel = Label<struct ObjectLabelTag>;
using ClassLabel = Label<struct ClassLabelTag>;
using ReferenceLabel = Label<struct ReferenceLabelTag>;

// The reserved reference label encoding direct inheritance.
inline const ReferenceLabel& inh_label() {
    static const ReferenceLabel label{"inh"};
    return label;
}

} // namespace mdweave

#endif
