"""
Result Store Module
Handles SQLite storage of exact strong chromatic indices and batch run records.
"""

import json
import sqlite3
from datetime import datetime
from pathlib import Path
from typing import Dict, List, Optional

from modules import logger


class ResultStore:
    """Manages the SQLite database of exact results and batch runs."""

    def __init__(self, db_path: str = None):
        """
        Initialize the result store.

        Args:
            db_path: Path to SQLite database file; defaults to
                ~/.strongcolor/results.db
        """
        if db_path is None:
            db_path = str(Path.home() / '.strongcolor' / 'results.db')
        if db_path != ':memory:':
            Path(db_path).parent.mkdir(parents=True, exist_ok=True)

        self.db_path = db_path
        self.conn = None
        self._initialize_database()

    def _get_connection(self) -> sqlite3.Connection:
        """Get or create database connection."""
        if self.conn is None:
            self.conn = sqlite3.connect(self.db_path)
            self.conn.row_factory = sqlite3.Row
        return self.conn

    def _initialize_database(self):
        """Create database tables if they don't exist."""
        conn = self._get_connection()
        cursor = conn.cursor()

        # Exact strong chromatic index cache, keyed by graph6
        cursor.execute('''
            CREATE TABLE IF NOT EXISTS exact_results (
                graph6 TEXT PRIMARY KEY,
                n INTEGER,
                m INTEGER,
                chi_s INTEGER,
                outcome TEXT,
                nodes INTEGER,
                seconds REAL,
                certificate TEXT,
                last_updated TEXT
            )
        ''')

        # One row per colored graph of a batch run
        cursor.execute('''
            CREATE TABLE IF NOT EXISTS batch_runs (
                id INTEGER PRIMARY KEY AUTOINCREMENT,
                input_id TEXT,
                n INTEGER,
                m INTEGER,
                colors_used INTEGER,
                exceptional INTEGER,
                verified INTEGER,
                trace TEXT,
                seconds REAL,
                error TEXT,
                run_label TEXT,
                created_at TEXT
            )
        ''')

        conn.commit()

    def save_exact_result(self, graph6: str, n: int, m: int, chi_s: Optional[int], outcome: str,
                          nodes: int = 0, seconds: float = 0.0, certificate: Optional[List] = None) -> bool:
        """Insert or replace the exact result of one graph."""
        try:
            conn = self._get_connection()
            cursor = conn.cursor()

            cursor.execute('''
                INSERT OR REPLACE INTO exact_results
                (graph6, n, m, chi_s, outcome, nodes, seconds, certificate, last_updated)
                VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?)
            ''', (
                graph6,
                n,
                m,
                chi_s,
                outcome,
                nodes,
                seconds,
                json.dumps(certificate) if certificate is not None else None,
                datetime.now().isoformat()
            ))

            conn.commit()
            return True
        except Exception as e:
            logger.error(f"Error saving exact result: {e}")
            return False

    def get_exact_result(self, graph6: str) -> Optional[Dict]:
        """Cached exact result for a graph6 key, or None."""
        try:
            cursor = self._get_connection().cursor()
            cursor.execute('SELECT * FROM exact_results WHERE graph6 = ?', (graph6,))
            row = cursor.fetchone()
            if row is None:
                return None
            record = dict(row)
            if record.get('certificate'):
                record['certificate'] = json.loads(record['certificate'])
            return record
        except Exception as e:
            logger.error(f"Error retrieving exact result: {e}")
            return None

    def insert_run_record(self, record: Dict, run_label: str) -> bool:
        """Insert one batch record (see batch_runner.GraphRecord.to_dict)."""
        try:
            conn = self._get_connection()
            cursor = conn.cursor()

            cursor.execute('''
                INSERT INTO batch_runs
                (input_id, n, m, colors_used, exceptional, verified, trace, seconds, error,
                 run_label, created_at)
                VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?)
            ''', (
                record.get('input_id'),
                record.get('n'),
                record.get('m'),
                record.get('colors_used'),
                1 if record.get('exceptional') else 0,
                1 if record.get('verified') else 0,
                json.dumps(record.get('trace', [])),
                record.get('seconds', 0.0),
                record.get('error'),
                run_label,
                datetime.now().isoformat()
            ))

            conn.commit()
            return True
        except Exception as e:
            logger.error(f"Error inserting run record: {e}")
            return False

    def get_run_records(self, run_label: str = None) -> List[Dict]:
        """Retrieve batch records, optionally for one run label, in insertion order."""
        try:
            cursor = self._get_connection().cursor()

            query = 'SELECT * FROM batch_runs WHERE 1=1'
            params = []

            if run_label:
                query += ' AND run_label = ?'
                params.append(run_label)

            query += ' ORDER BY id'

            cursor.execute(query, params)
            records = []
            for row in cursor.fetchall():
                record = dict(row)
                record['exceptional'] = bool(record['exceptional'])
                record['verified'] = bool(record['verified'])
                record['trace'] = json.loads(record['trace']) if record['trace'] else []
                records.append(record)
            return records
        except Exception as e:
            logger.error(f"Error retrieving run records: {e}")
            return []

    def summarize_runs(self, run_label: str) -> Dict:
        """Aggregate counts of one run."""
        try:
            cursor = self._get_connection().cursor()
            cursor.execute('''
                SELECT COUNT(*) AS total,
                       COALESCE(SUM(verified), 0) AS verified,
                       COALESCE(SUM(exceptional), 0) AS exceptional,
                       COALESCE(SUM(CASE WHEN error IS NOT NULL THEN 1 ELSE 0 END), 0) AS errors,
                       MAX(colors_used) AS max_colors,
                       COALESCE(SUM(seconds), 0.0) AS seconds
                FROM batch_runs WHERE run_label = ?
            ''', (run_label,))
            return dict(cursor.fetchone())
        except Exception as e:
            logger.error(f"Error summarizing run {run_label}: {e}")
            return {}

    def close(self):
        """Close database connection."""
        if self.conn:
            self.conn.close()
            self.conn = None
