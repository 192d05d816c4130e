// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0

#include "assembler.hpp"

#include <evmlift/opcodes.hpp>

#include <sstream>
#include <stdexcept>

namespace evmlift::test
{
namespace
{
u256 parse_value(const std::string& token)
{
    return u256{token};
}
}  // namespace

Assembler& Assembler::code(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token)
    {
        if (token.ends_with(":"))
        {
            label(token.substr(0, token.size() - 1));
            continue;
        }
        if (token == ".pad")
        {
            std::string arg;
            in >> arg;
            pad_to(static_cast<std::uint64_t>(parse_value(arg)));
            continue;
        }
        const auto opcode = opcode_from_name(token);
        if (!opcode)
            throw std::invalid_argument("unknown mnemonic '" + token + "'");
        const auto width = push_size(*opcode);
        if (width == 0)
        {
            op(*opcode);
            continue;
        }
        std::string arg;
        if (!(in >> arg))
            throw std::invalid_argument(token + " needs an immediate");
        if (arg.starts_with("@"))
            push_label(arg.substr(1), width);
        else
            push(parse_value(arg), width);
    }
    return *this;
}

Assembler& Assembler::op(std::uint8_t opcode)
{
    code_.push_back(opcode);
    return *this;
}

Assembler& Assembler::push(const u256& value, unsigned width)
{
    if (width == 0 || width > 32 || (width < 32 && (value >> (8 * width)) != 0))
        throw std::invalid_argument("immediate " + to_hex(value) + " does not fit PUSH" + std::to_string(width));
    code_.push_back(static_cast<std::uint8_t>(OP_PUSH1 + width - 1));
    for (unsigned i = width; i-- > 0;)
        code_.push_back(static_cast<std::uint8_t>((value >> (8 * i)) & 0xff));
    return *this;
}

Assembler& Assembler::push_label(const std::string& label, unsigned width)
{
    code_.push_back(static_cast<std::uint8_t>(OP_PUSH1 + width - 1));
    fixups_.push_back({code_.size(), width, label});
    code_.resize(code_.size() + width, 0);
    return *this;
}

Assembler& Assembler::label(const std::string& name)
{
    if (!labels_.emplace(name, code_.size()).second)
        throw std::invalid_argument("duplicate label " + name);
    return *this;
}

Assembler& Assembler::pad_to(std::uint64_t pc)
{
    if (pc < code_.size())
        throw std::invalid_argument("cannot pad backwards to " + to_hex(pc));
    code_.resize(pc, OP_INVALID);
    return *this;
}

std::uint64_t Assembler::address(const std::string& label) const
{
    const auto it = labels_.find(label);
    if (it == labels_.end())
        throw std::invalid_argument("undefined label " + label);
    return it->second;
}

bytes Assembler::build() const
{
    auto out = code_;
    for (const auto& f : fixups_)
    {
        const auto addr = address(f.label);
        if (f.width < 8 && (addr >> (8 * f.width)) != 0)
            throw std::invalid_argument("label " + f.label + " does not fit");
        for (unsigned i = 0; i < f.width; ++i)
            out[f.offset + i] = static_cast<std::uint8_t>((addr >> (8 * (f.width - 1 - i))) & 0xff);
    }
    return out;
}

bytes assemble(std::string_view text)
{
    return Assembler{}.code(text).build();
}
}  // namespace evmlift::test
