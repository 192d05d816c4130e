// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmlift/interpreter.hpp>
#include <evmlift/opcodes.hpp>

#include <stdexcept>

namespace evmlift
{
namespace
{
using boost::multiprecision::uint512_t;

constexpr std::size_t max_memory = 1 << 20;
constexpr std::size_t max_stack = 1024;

bool is_negative(const u256& x)
{
    return bit_test(x, 255);
}

u256 negate(const u256& x)
{
    return ~x + 1;
}

u256 abs_value(const u256& x)
{
    return is_negative(x) ? negate(x) : x;
}

u256 exp_mod(u256 base, u256 exponent)
{
    u256 result = 1;
    while (exponent != 0)
    {
        if ((exponent & 1) != 0)
            result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

u256 word_from_bytes(const bytes& data, const u256& offset)
{
    u256 w = 0;
    for (std::size_t i = 0; i < 32; ++i)
    {
        w <<= 8;
        if (offset < data.size() && offset + i < data.size())
            w |= data[static_cast<std::size_t>(offset) + i];
    }
    return w;
}

void store_word(bytes& data, std::size_t offset, const u256& w)
{
    if (data.size() < offset + 32)
        data.resize(offset + 32);
    for (std::size_t i = 0; i < 32; ++i)
        data[offset + i] = static_cast<std::uint8_t>((w >> (8 * (31 - i))) & 0xff);
}

class Halt
{
public:
    explicit Halt(HaltReason r) : reason{r} {}
    HaltReason reason;
};

class Machine
{
public:
    Machine(const BytecodeProgram& program, const EnvValuation& env)
      : program_{program}, env_{env}, storage_{env.storage}
    {}

    Trace run(std::size_t max_steps)
    {
        Trace trace;
        const BasicBlock* block = program_.find_block(0);
        try
        {
            while (block != nullptr)
            {
                trace.visits.push_back(block->id);
                for (const auto& inst : block->instructions)
                {
                    if (trace.step_count >= max_steps)
                        throw Halt{HaltReason::out_of_steps};
                    ++trace.step_count;
                    step(inst);
                }
                block = next_block(*block);
            }
            trace.halted = HaltReason::stop;
        }
        catch (const Halt& h)
        {
            trace.halted = h.reason;
        }
        trace.final_stack.assign(stack_.rbegin(), stack_.rend());
        return trace;
    }

private:
    u256 pop()
    {
        if (stack_.empty())
            throw Halt{HaltReason::invalid};
        auto v = stack_.back();
        stack_.pop_back();
        return v;
    }

    void push(const u256& v)
    {
        if (stack_.size() >= max_stack)
            throw Halt{HaltReason::invalid};
        stack_.push_back(v);
    }

    std::size_t memory_offset(const u256& offset, std::size_t size)
    {
        if (offset > max_memory - size)
            throw Halt{HaltReason::invalid};
        return static_cast<std::size_t>(offset);
    }

    const BasicBlock* jump_to(const u256& target)
    {
        if (!program_.is_jump_target(target))
            throw Halt{HaltReason::invalid};
        return program_.find_block(static_cast<BlockId>(target));
    }

    const BasicBlock* next_block(const BasicBlock& block)
    {
        switch (block.terminator)
        {
        case TerminatorKind::jump:
            return jump_to(pending_target_);
        case TerminatorKind::conditional_jump:
            if (pending_condition_ != 0)
                return jump_to(pending_target_);
            [[fallthrough]];
        case TerminatorKind::fallthrough:
            if (const auto next = program_.fallthrough_of(block))
                return program_.find_block(*next);
            return nullptr;
        case TerminatorKind::halt:
            break;
        }
        return nullptr;
    }

    void step(const Instruction& inst)
    {
        const auto op = inst.opcode;
        if (is_push(op))
            return push(inst.pushed_value.value_or(0));
        if (is_dup(op))
        {
            const auto n = dup_swap_n(op);
            if (stack_.size() < n)
                throw Halt{HaltReason::invalid};
            return push(stack_[stack_.size() - n]);
        }
        if (is_swap(op))
        {
            const auto n = dup_swap_n(op);
            if (stack_.size() < n + 1)
                throw Halt{HaltReason::invalid};
            std::swap(stack_.back(), stack_[stack_.size() - 1 - n]);
            return;
        }

        switch (op)
        {
        case OP_STOP:
            throw Halt{HaltReason::stop};
        case OP_RETURN:
            pop();
            pop();
            throw Halt{HaltReason::return_};
        case OP_REVERT:
            pop();
            pop();
            throw Halt{HaltReason::revert};
        case OP_SELFDESTRUCT:
            pop();
            throw Halt{HaltReason::stop};
        case OP_JUMPDEST:
            return;
        case OP_JUMP:
            pending_target_ = pop();
            return;
        case OP_JUMPI:
            pending_target_ = pop();
            pending_condition_ = pop();
            return;
        case OP_POP:
            pop();
            return;
        case OP_ADD:
            return binary([](const u256& a, const u256& b) { return a + b; });
        case OP_MUL:
            return binary([](const u256& a, const u256& b) { return a * b; });
        case OP_SUB:
            return binary([](const u256& a, const u256& b) { return a - b; });
        case OP_DIV:
            return binary([](const u256& a, const u256& b) { return b == 0 ? u256{0} : a / b; });
        case OP_SDIV:
            return binary([](const u256& a, const u256& b) {
                if (b == 0)
                    return u256{0};
                const auto q = abs_value(a) / abs_value(b);
                return is_negative(a) != is_negative(b) ? negate(q) : q;
            });
        case OP_MOD:
            return binary([](const u256& a, const u256& b) { return b == 0 ? u256{0} : a % b; });
        case OP_SMOD:
            return binary([](const u256& a, const u256& b) {
                if (b == 0)
                    return u256{0};
                const auto r = abs_value(a) % abs_value(b);
                return is_negative(a) ? negate(r) : r;
            });
        case OP_ADDMOD:
        case OP_MULMOD:
        {
            const uint512_t a{pop()};
            const uint512_t b{pop()};
            const uint512_t n{pop()};
            if (n == 0)
                return push(0);
            const auto r = op == OP_ADDMOD ? (a + b) % n : (a * b) % n;
            return push(static_cast<u256>(r));
        }
        case OP_EXP:
            return binary(exp_mod);
        case OP_SIGNEXTEND:
            return binary([](const u256& b, const u256& x) {
                if (b >= 31)
                    return x;
                const auto bit = static_cast<unsigned>(b) * 8 + 7;
                const u256 mask = (u256{1} << (bit + 1)) - 1;
                return bit_test(x, bit) ? (x | ~mask) : (x & mask);
            });
        case OP_LT:
            return binary([](const u256& a, const u256& b) { return u256{a < b}; });
        case OP_GT:
            return binary([](const u256& a, const u256& b) { return u256{a > b}; });
        case OP_SLT:
            return binary([](const u256& a, const u256& b) {
                if (is_negative(a) != is_negative(b))
                    return u256{is_negative(a)};
                return u256{a < b};
            });
        case OP_SGT:
            return binary([](const u256& a, const u256& b) {
                if (is_negative(a) != is_negative(b))
                    return u256{is_negative(b)};
                return u256{a > b};
            });
        case OP_EQ:
            return binary([](const u256& a, const u256& b) { return u256{a == b}; });
        case OP_ISZERO:
            return push(u256{pop() == 0});
        case OP_AND:
            return binary([](const u256& a, const u256& b) { return a & b; });
        case OP_OR:
            return binary([](const u256& a, const u256& b) { return a | b; });
        case OP_XOR:
            return binary([](const u256& a, const u256& b) { return a ^ b; });
        case OP_NOT:
            return push(~pop());
        case OP_BYTE:
            return binary([](const u256& i, const u256& x) {
                if (i >= 32)
                    return u256{0};
                return (x >> (8 * (31 - static_cast<unsigned>(i)))) & 0xff;
            });
        case OP_SHL:
            return binary([](const u256& s, const u256& x) {
                return s >= 256 ? u256{0} : u256{x << static_cast<unsigned>(s)};
            });
        case OP_SHR:
            return binary([](const u256& s, const u256& x) {
                return s >= 256 ? u256{0} : u256{x >> static_cast<unsigned>(s)};
            });
        case OP_SAR:
            return binary([](const u256& s, const u256& x) {
                const bool neg = is_negative(x);
                if (s >= 256)
                    return neg ? ~u256{0} : u256{0};
                const auto n = static_cast<unsigned>(s);
                return neg ? u256{~((~x) >> n)} : u256{x >> n};
            });
        case OP_CALLDATALOAD:
            return push(word_from_bytes(env_.calldata, pop()));
        case OP_CALLDATASIZE:
            return push(env_.calldata.size());
        case OP_SLOAD:
        {
            const auto key = pop();
            const auto it = storage_.find(key);
            return push(it != storage_.end() ? it->second : env_.env_default);
        }
        case OP_SSTORE:
        {
            const auto key = pop();
            storage_[key] = pop();
            return;
        }
        case OP_MLOAD:
        {
            const auto off = memory_offset(pop(), 32);
            return push(word_from_bytes(memory_, off));
        }
        case OP_MSTORE:
        {
            const auto off = memory_offset(pop(), 32);
            store_word(memory_, off, pop());
            return;
        }
        case OP_MSTORE8:
        {
            const auto off = memory_offset(pop(), 1);
            if (memory_.size() < off + 1)
                memory_.resize(off + 1);
            memory_[off] = static_cast<std::uint8_t>(pop() & 0xff);
            return;
        }
        case OP_PC:
            return push(inst.pc);
        default:
            break;
        }

        const auto& info = opcode_info(op);
        if (!info.defined || info.halts)
            throw Halt{HaltReason::invalid};
        for (unsigned i = 0; i < info.pops; ++i)
            pop();
        for (unsigned i = 0; i < info.pushes; ++i)
            push(env_.env_default);
    }

    template <typename F>
    void binary(F f)
    {
        const auto a = pop();
        const auto b = pop();
        push(f(a, b));
    }

    const BytecodeProgram& program_;
    const EnvValuation& env_;
    std::map<u256, u256> storage_;
    bytes memory_;
    std::vector<u256> stack_;
    u256 pending_target_ = 0;
    u256 pending_condition_ = 0;
};
}  // namespace

std::string_view to_string(HaltReason r) noexcept
{
    switch (r)
    {
    case HaltReason::stop:
        return "stop";
    case HaltReason::return_:
        return "return";
    case HaltReason::revert:
        return "revert";
    case HaltReason::invalid:
        return "invalid";
    case HaltReason::out_of_steps:
        return "out-of-steps";
    }
    return "unknown";
}

std::set<BlockEdge> Trace::edges() const
{
    std::set<BlockEdge> out;
    for (std::size_t i = 1; i < visits.size(); ++i)
        out.emplace(visits[i - 1], visits[i]);
    return out;
}

Trace concrete_execute(const BytecodeProgram& program, const EnvValuation& env, std::size_t max_steps)
{
    if (max_steps == 0)
        throw std::invalid_argument("max_steps must be at least 1");
    return Machine{program, env}.run(max_steps);
}

std::size_t EnvSets::product() const
{
    std::size_t n = std::max<std::size_t>(env_defaults.size(), 1);
    const auto mul = [&n](std::size_t k) {
        k = std::max<std::size_t>(k, 1);
        n = n > max_env_valuations ? n : n * k;
    };
    for (const auto& [off, values] : calldata_words)
        mul(values.size());
    for (const auto& [key, values] : storage)
        mul(values.size());
    return n;
}

std::vector<EnvValuation> EnvSets::valuations() const
{
    if (product() > max_env_valuations)
        throw std::invalid_argument("environment product exceeds " + std::to_string(max_env_valuations));

    std::size_t calldata_size = 0;
    for (const auto& [off, values] : calldata_words)
        calldata_size = std::max<std::size_t>(calldata_size, off + 32);

    std::vector<EnvValuation> out{EnvValuation{bytes(calldata_size, 0), {}, 0}};
    const auto expand = [&out](auto apply, const std::vector<u256>& values) {
        if (values.empty())
            return;
        std::vector<EnvValuation> next;
        next.reserve(out.size() * values.size());
        for (const auto& base : out)
            for (const auto& v : values)
            {
                auto e = base;
                apply(e, v);
                next.push_back(std::move(e));
            }
        out = std::move(next);
    };
    for (const auto& [off, values] : calldata_words)
        expand([off](EnvValuation& e, const u256& v) { store_word(e.calldata, off, v); }, values);
    for (const auto& [key, values] : storage)
        expand([&key](EnvValuation& e, const u256& v) { e.storage[key] = v; }, values);
    expand([](EnvValuation& e, const u256& v) { e.env_default = v; }, env_defaults);
    return out;
}

EdgeEnumeration enumerate_edges(const BytecodeProgram& program, const EnvSets& env_sets,
    std::size_t max_steps)
{
    EdgeEnumeration result;
    for (const auto& env : env_sets.valuations())
    {
        const auto trace = concrete_execute(program, env, max_steps);
        ++result.runs;
        if (trace.halted == HaltReason::out_of_steps)
        {
            ++result.out_of_steps;
            continue;
        }
        const auto e = trace.edges();
        result.edges.insert(e.begin(), e.end());
    }
    return result;
}
}  // namespace evmlift
