import logging

import pandas as pd
import plotly.express as px
import streamlit as st

from src.code_report_processor import CodeReportProcessor
from src.errors import CyclicCodeError
from src.gray_map import GRAY_K, format_parameters
from src.settings import DEFAULT_CODEWORD_BUDGET, Settings

# Настройка страницы
st.set_page_config(
    page_title="Циклические коды над Z4[u]/<u^k>",
    page_icon="🧮",
    layout="wide",
    initial_sidebar_state="expanded"
)

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

st.markdown("""
<style>
    .main-header {
        font-size: 2.2rem;
        font-weight: bold;
        color: #1f77b4;
        text-align: center;
        margin-bottom: 1.5rem;
        padding: 1rem;
        background: linear-gradient(90deg, #f0f2f6, #e1e5e9);
        border-radius: 10px;
    }
</style>
""", unsafe_allow_html=True)


def main():
    st.markdown('<div class="main-header">🧮 Циклические коды над Z4[u]/&lt;u^k&gt;</div>', unsafe_allow_html=True)

    with st.sidebar:
        st.header("⚙️ Параметры")
        n = st.number_input("Длина кода n (нечётная)", min_value=1, max_value=63, value=7, step=2)
        k = st.number_input("Длина цепи k", min_value=2, max_value=8, value=4)
        block_order = st.checkbox("Блочный порядок множителей", value=False)
        budget = st.number_input("Бюджет кодовых слов", min_value=1, value=DEFAULT_CODEWORD_BUDGET)

        st.header("ℹ️ О приложении")
        st.info("""
        Разложение x^n - 1 над Z4, перечисление идеалов, дуальные
        и самодуальные коды, образ Υ и расстояние Ли при k = 4.
        """)

    processor = CodeReportProcessor(Settings(codeword_budget=int(budget), block_order=block_order))
    tab1, tab2, tab3, tab4 = st.tabs(["Разложение", "Идеалы", "Конструктор кода", "Самодуальные коды"])

    try:
        with tab1:
            show_factorization(processor, int(n), int(k))
        with tab2:
            show_ideals(processor, int(k))
        with tab3:
            show_code_builder(processor, int(n), int(k))
        with tab4:
            show_self_dual(processor, int(n), int(k))
    except CyclicCodeError as e:
        st.error(f"Ошибка: {e}")
        logger.error('Ошибка: %s', e)


def show_factorization(processor: CodeReportProcessor, n: int, k: int):
    st.header(f"x^{n} - 1 над Z4")
    report = processor.factor(n)
    st.dataframe(report.table[['j', 'f', 'f_bar', 'degree', 'e', 'sigma', 'delta']],
                 use_container_width=True, hide_index=True)
    st.write(report.lines[-1])
    count = processor.count(n, k)
    st.metric("Число циклических кодов", f"{count.summary['total']:,}".replace(',', ' '))


def show_ideals(processor: CodeReportProcessor, k: int):
    d = st.number_input("Степень d поля", min_value=1, max_value=6, value=3)
    report = processor.ideals(int(d), k, count_only=True)
    st.metric("Число идеалов", report.summary['total'])
    table = report.table
    st.dataframe(table, use_container_width=True, hide_index=True)
    fig = px.bar(table, x='case', y='formula_count', title=f'Идеалы GR(4,{d})[u]/<u^{k}> по случаям')
    st.plotly_chart(fig, use_container_width=True)
    if st.checkbox("Показать все идеалы"):
        st.dataframe(processor.ideals(int(d), k).table, use_container_width=True, hide_index=True)


def show_code_builder(processor: CodeReportProcessor, n: int, k: int):
    system = processor.system(n)
    default = ';'.join(['0'] * system.r)
    specs = st.text_input("Идеалы по множителям через ';'", value=default)
    if not st.button("Построить", type="primary"):
        return
    with st.spinner("Вычисление..."):
        code = processor.parse_code(n, k, specs)
        st.write(f"|C| = 2^{code.log2_size}")
        dual = processor.dual(n, k, specs)
        st.dataframe(dual.table, use_container_width=True, hide_index=True)
        st.write(f"Самодуальный: {'да' if dual.summary['self_dual'] else 'нет'}")
        if k == GRAY_K:
            distance = processor.distance(n, specs)
            parameters = (distance.summary['length'], distance.summary['log2_size'],
                          distance.summary['min_lee_distance'])
            st.success(f"Параметры образа Υ: {format_parameters(parameters)}")


def show_self_dual(processor: CodeReportProcessor, n: int, k: int):
    report = processor.selfdual(n, k, count_only=True, check_rules=True)
    st.metric("Самодуальных кодов", report.summary['total'])
    for line in report.lines[:-1]:
        st.warning(line)
    if not report.table.empty:
        st.subheader("Выбор для пар множителей")
        st.dataframe(report.table, use_container_width=True, hide_index=True)
    if report.summary['total'] <= 5000 and st.checkbox("Показать все коды"):
        census = processor.selfdual(n, k)
        st.dataframe(pd.DataFrame(census.table), use_container_width=True, hide_index=True)


if __name__ == "__main__":
    main()
